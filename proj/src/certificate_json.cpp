#include "lenscob/certificate_json.hpp"

#include <vector>

namespace lenscob {

using nlohmann::json;

namespace {

json int_array(const std::vector<Int>& values) {
  json out = json::array();
  for (const Int& v : values) {
    out.push_back(to_string(v));
  }
  return out;
}

const json& field(const json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) {
    throw CertificateFormatError(std::string("missing field '") + key + "'");
  }
  return doc.at(key);
}

Int read_int(const json& value, const std::string& what) {
  if (!value.is_string()) {
    throw CertificateFormatError(what + " must be a decimal string");
  }
  try {
    return parse_int(value.get<std::string>());
  } catch (const DomainError&) {
    throw CertificateFormatError(what + " is not an integer: " + value.get<std::string>());
  }
}

int read_sign(const json& value, const std::string& what) {
  const Int v = read_int(value, what);
  if (v != 1 && v != -1) {
    throw CertificateFormatError(what + " must be 1 or -1");
  }
  return v == 1 ? 1 : -1;
}

std::vector<Int> read_int_array(const json& value, const std::string& what, std::size_t n) {
  if (!value.is_array() || value.size() != n) {
    throw CertificateFormatError(what + " must be an array of " + std::to_string(n) +
                                 " integers");
  }
  std::vector<Int> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(read_int(value[i], what + "[" + std::to_string(i) + "]"));
  }
  return out;
}

}  // namespace

json trace_to_json(const ConstructionTrace& trace) {
  return json{
      {"branch", trace.branch == Branch::QBranch ? "q" : "r"},
      {"k", to_string(trace.k)},
      {"q_prime", to_string(trace.q_prime)},
      {"s_prime", to_string(trace.s_prime)},
      {"q_tilde", to_string(trace.q_tilde)},
      {"eps", std::to_string(trace.eps)},
      {"z", to_string(trace.z)},
      {"z_inv", to_string(trace.z_inv)},
      {"eps_prime", std::to_string(trace.eps_prime)},
      {"D", to_string(trace.D)},
      {"n_form", to_string(trace.n_form)},
      {"z0", to_string(trace.z0)},
      {"C0", to_string(trace.c0)},
      {"w", to_string(trace.w)},
  };
}

ConstructionTrace trace_from_json(const json& doc) {
  ConstructionTrace trace;
  const json& branch = field(doc, "branch");
  if (branch == "q") {
    trace.branch = Branch::QBranch;
  } else if (branch == "r") {
    trace.branch = Branch::RBranch;
  } else {
    throw CertificateFormatError("trace.branch must be \"q\" or \"r\"");
  }
  trace.k = read_int(field(doc, "k"), "trace.k");
  trace.q_prime = read_int(field(doc, "q_prime"), "trace.q_prime");
  trace.s_prime = read_int(field(doc, "s_prime"), "trace.s_prime");
  trace.q_tilde = read_int(field(doc, "q_tilde"), "trace.q_tilde");
  trace.eps = read_sign(field(doc, "eps"), "trace.eps");
  trace.z = read_int(field(doc, "z"), "trace.z");
  trace.z_inv = read_int(field(doc, "z_inv"), "trace.z_inv");
  trace.eps_prime = read_sign(field(doc, "eps_prime"), "trace.eps_prime");
  trace.D = read_int(field(doc, "D"), "trace.D");
  trace.n_form = read_int(field(doc, "n_form"), "trace.n_form");
  trace.z0 = read_int(field(doc, "z0"), "trace.z0");
  trace.c0 = read_int(field(doc, "C0"), "trace.C0");
  trace.w = read_int(field(doc, "w"), "trace.w");
  return trace;
}

json certificate_to_json(const Certificate& certificate) {
  const Witness& w = certificate.witness;
  const std::size_t n = w.holes();
  json l = json::array();
  for (std::size_t i = 0; i < n; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < n; ++j) {
      row.push_back(to_string(w.linking()(i, j)));
    }
    l.push_back(std::move(row));
  }
  json doc{
      {"p", to_string(certificate.lens.p())},
      {"q", to_string(certificate.lens.q())},
      {"n", std::to_string(n)},
      {"a", int_array(w.a())},
      {"t", int_array(w.t())},
      {"l", std::move(l)},
      {"det", to_string(certificate.det)},
      {"valid", certificate.valid},
  };
  if (certificate.trace) {
    doc["trace"] = trace_to_json(*certificate.trace);
  }
  return doc;
}

Certificate certificate_from_json(const json& doc) {
  if (!doc.is_object()) {
    throw CertificateFormatError("certificate must be a JSON object");
  }
  const Int p = read_int(field(doc, "p"), "p");
  const Int q = read_int(field(doc, "q"), "q");
  const Int n_value = read_int(field(doc, "n"), "n");
  if (n_value < 1 || n_value > 4096) {
    throw CertificateFormatError("n must be in [1, 4096]");
  }
  const auto n = static_cast<std::size_t>(n_value);

  std::vector<Int> a = read_int_array(field(doc, "a"), "a", n);
  std::vector<Int> t = read_int_array(field(doc, "t"), "t", n);
  const json& l_doc = field(doc, "l");
  if (!l_doc.is_array() || l_doc.size() != n) {
    throw CertificateFormatError("l must be an n x n array");
  }
  IntMatrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::vector<Int> row = read_int_array(l_doc[i], "l[" + std::to_string(i) + "]", n);
    for (std::size_t j = 0; j < n; ++j) {
      l(i, j) = row[j];
    }
  }
  const Int det = read_int(field(doc, "det"), "det");
  const json& valid = field(doc, "valid");
  if (!valid.is_boolean()) {
    throw CertificateFormatError("valid must be a boolean");
  }

  std::optional<ConstructionTrace> trace;
  if (doc.contains("trace") && !doc.at("trace").is_null()) {
    trace = trace_from_json(doc.at("trace"));
  }

  try {
    return Certificate{LensSpace(p, q), Witness(std::move(a), std::move(t), std::move(l)), det,
                       valid.get<bool>(), std::move(trace)};
  } catch (const DomainError& e) {
    throw CertificateFormatError(e.what());
  }
}

Certificate parse_certificate(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw CertificateFormatError(std::string("invalid JSON: ") + e.what());
  }
  return certificate_from_json(doc);
}

}  // namespace lenscob
