#include "commands.hpp"

#include <exception>
#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "lenscob/certificate_json.hpp"
#include "lenscob/oracle.hpp"
#include "lenscob/solver.hpp"

namespace lenscob::cli {

namespace {

using nlohmann::json;

// Malformed command-line argument (exit 64), as opposed to a well-formed
// argument outside the mathematical domain (exit 2).
class UsageError : public Error {
 public:
  using Error::Error;
};

Int int_argument(const std::string& text) {
  try {
    return parse_int(text);
  } catch (const DomainError& e) {
    throw UsageError(e.what());
  }
}

std::string join(const std::vector<Int>& values) {
  std::string out = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? ", " : "") + values[i].str();
  }
  return out + "]";
}

void print_witness(const Witness& w, std::ostream& out) {
  out << "holes: " << w.holes() << "\n";
  out << "a: " << join(w.a()) << "\n";
  out << "t: " << join(w.t()) << "\n";
  for (std::size_t i = 0; i < w.holes(); ++i) {
    for (std::size_t j = i + 1; j < w.holes(); ++j) {
      out << "l" << i + 1 << "," << j + 1 << ": " << w.linking()(i, j) << "\n";
    }
  }
}

void print_trace(const ConstructionTrace& tr, std::ostream& out) {
  out << "trace:\n"
      << "  branch: " << to_string(tr.branch) << "\n"
      << "  k: " << tr.k << "\n"
      << "  q': " << tr.q_prime << "\n"
      << "  s': " << tr.s_prime << "\n"
      << "  working coefficient: " << tr.q_tilde << "\n"
      << "  eps: " << tr.eps << "\n"
      << "  z: " << tr.z << "\n"
      << "  z': " << tr.z_inv << "\n"
      << "  eps': " << tr.eps_prime << "\n"
      << "  D: " << tr.D << "\n"
      << "  n: " << tr.n_form << "\n"
      << "  z0: " << tr.z0 << "\n"
      << "  C0: " << tr.c0 << "\n"
      << "  w: " << tr.w << "\n";
}

// Maps library exceptions onto exit codes; everything else propagates.
template <typename Fn>
int guarded(std::ostream& err, Fn&& body) {
  try {
    return body();
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
    return kResourceError;
  } catch (const IntegrityError& e) {
    err << "integrity failure: " << e.what() << "\n";
    return kResourceError;
  }
}

struct SolverFlags {
  std::uint64_t cap = kDefaultPrimeSearchCap;
  unsigned mr_rounds = nt::kDefaultMillerRabinRounds;

  SolverOptions options() const { return SolverOptions{cap, mr_rounds}; }

  void attach(CLI::App* cmd) {
    cmd->add_option("--cap", cap, "Shifts k tried per branch in the prime search")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--mr-rounds", mr_rounds, "Miller-Rabin rounds above the deterministic bound")
        ->check(CLI::PositiveNumber);
  }
};

int analyze(const std::string& p_text, const std::string& q_text, const SolverFlags& flags,
            bool trace, bool as_json, std::ostream& out) {
  const NormalizedLens normalized = normalize(int_argument(p_text), int_argument(q_text));
  if (const auto* special = std::get_if<SpecialCase>(&normalized)) {
    if (as_json) {
      out << json{{"p", p_text}, {"q", q_text}, {"special", describe(*special)}}.dump() << "\n";
    } else {
      out << "input: (" << p_text << ", " << q_text << ")\n"
          << "special case: " << describe(*special) << "\n";
    }
    return kOk;
  }
  const LensSpace& lens = std::get<LensSpace>(normalized);
  const BoundaryAnswer answer = minimal_planar_boundaries(lens, flags.options());
  if (as_json) {
    Certificate cert = answer.certificate;
    if (!trace) {
      cert.trace.reset();
    }
    out << certificate_to_json(cert).dump() << "\n";
    return kOk;
  }
  out << "lens space: " << lens.name() << "\n"
      << "boundary components: " << answer.boundaries << "\n";
  print_witness(answer.certificate.witness, out);
  out << "determinant: " << answer.certificate.det << "\n"
      << "continued fraction bound: " << continued_fraction_bound(lens) << "\n";
  if (trace && answer.certificate.trace) {
    print_trace(*answer.certificate.trace, out);
  }
  return kOk;
}

struct TableRow {
  Int q;
  int boundaries = 0;
  Int det;
};

std::vector<TableRow> table_rows_for(const Int& p, const SolverOptions& options) {
  std::vector<TableRow> rows;
  for (Int q = 1; q < p; ++q) {
    if (nt::gcd(p, q) != 1) {
      continue;
    }
    const BoundaryAnswer answer = minimal_planar_boundaries(LensSpace(p, q), options);
    rows.push_back({q, answer.boundaries, answer.certificate.det});
  }
  return rows;
}

int table(const std::string& pmax_text, const SolverFlags& flags, const std::string& format,
          bool summary, unsigned jobs, std::ostream& out) {
  const Int pmax = int_argument(pmax_text);
  if (pmax < 2) {
    throw DomainError("table: pmax must be >= 2");
  }
  if (pmax > 1000000) {
    throw DomainError("table: pmax above 10^6 is not supported");
  }
  const auto last = pmax.convert_to<std::uint64_t>();
  const std::size_t count = static_cast<std::size_t>(last - 1);
  const SolverOptions options = flags.options();

  // Shards p values round-robin; results land in per-p slots so the output
  // order never depends on scheduling.
  std::vector<std::vector<TableRow>> results(count);
  std::vector<std::exception_ptr> failures(jobs);
  std::vector<std::thread> workers;
  for (unsigned worker = 0; worker < jobs; ++worker) {
    workers.emplace_back([&, worker] {
      try {
        for (std::size_t i = worker; i < count; i += jobs) {
          results[i] = table_rows_for(Int(i + 2), options);
        }
      } catch (...) {
        failures[worker] = std::current_exception();
      }
    });
  }
  for (auto& t : workers) {
    t.join();
  }
  for (const auto& failure : failures) {
    if (failure) {
      std::rethrow_exception(failure);
    }
  }

  const bool jsonl = format == "jsonl";
  if (!jsonl) {
    out << "p\tq\tboundaries\tdet\n";
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::string p = std::to_string(i + 2);
    for (const TableRow& row : results[i]) {
      if (jsonl) {
        out << json{{"p", p},
                    {"q", row.q.str()},
                    {"boundaries", std::to_string(row.boundaries)},
                    {"det", row.det.str()}}
                   .dump()
            << "\n";
      } else {
        out << p << "\t" << row.q << "\t" << row.boundaries << "\t" << row.det << "\n";
      }
    }
  }
  if (summary) {
    if (!jsonl) {
      out << "# summary\np\ttwo\tthree\n";
    }
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t two = 0;
      for (const TableRow& row : results[i]) {
        two += row.boundaries == 2 ? 1 : 0;
      }
      const std::string p = std::to_string(i + 2);
      const std::string three = std::to_string(results[i].size() - two);
      if (jsonl) {
        out << json{{"summary", true}, {"p", p}, {"two", std::to_string(two)}, {"three", three}}
                   .dump()
            << "\n";
      } else {
        out << p << "\t" << two << "\t" << three << "\n";
      }
    }
  }
  return kOk;
}

int verify_certificate(const std::string& path, std::istream& in, std::ostream& out,
                       std::ostream& err) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
  } else {
    std::ifstream file(path);
    if (!file) {
      err << "error: cannot open " << path << "\n";
      return kDataError;
    }
    text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
  }

  Certificate stored = [&] {
    try {
      return parse_certificate(text);
    } catch (const CertificateFormatError& e) {
      err << "error: " << e.what() << "\n";
      throw;
    }
  }();

  const Certificate fresh = verify(stored.lens, stored.witness);
  std::vector<std::string> problems;
  if (!fresh.valid) {
    problems.push_back("determinant " + fresh.det.str() + " is not +-1");
  }
  if (stored.det != fresh.det) {
    problems.push_back("stored det " + stored.det.str() + " but recomputed " + fresh.det.str());
  }
  if (stored.valid != fresh.valid) {
    problems.push_back(std::string("stored valid=") + (stored.valid ? "true" : "false") +
                       " disagrees with recomputation");
  }
  if (stored.trace && stored.trace->eps_prime != fresh.det) {
    problems.push_back("trace eps' = " + std::to_string(stored.trace->eps_prime) +
                       " disagrees with det " + fresh.det.str());
  }
  if (!problems.empty()) {
    out << "INVALID " << stored.lens.name() << "\n";
    for (const auto& problem : problems) {
      out << "  " << problem << "\n";
    }
    return kVerifyFailed;
  }
  out << "OK " << stored.lens.name() << " n=" << stored.witness.holes() << " det=" << fresh.det
      << "\n";
  return kOk;
}

LensSpace lens_argument(const std::string& p, const std::string& q) {
  const NormalizedLens normalized = normalize(int_argument(p), int_argument(q));
  if (const auto* special = std::get_if<SpecialCase>(&normalized)) {
    throw DomainError("(" + p + ", " + q + ") is a special case: " + describe(*special));
  }
  return std::get<LensSpace>(normalized);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Planar homologically fibered surfaces in lens spaces"};
  app.name("lenscob");
  app.require_subcommand(1);

  std::string p_text, q_text;
  SolverFlags flags;
  bool trace = false, as_json = false;
  auto* analyze_cmd = app.add_subcommand("analyze", "Minimal boundary count for L(p,q)");
  analyze_cmd->add_option("p", p_text)->required();
  analyze_cmd->add_option("q", q_text)->required();
  analyze_cmd->add_flag("--trace", trace, "Include the construction trace");
  analyze_cmd->add_flag("--json", as_json, "Emit the certificate as JSON");
  flags.attach(analyze_cmd);

  std::string pmax_text, format = "tsv";
  bool summary = false;
  unsigned jobs = 1;
  auto* table_cmd = app.add_subcommand("table", "Census of all L(p,q) with p <= pmax");
  table_cmd->add_option("pmax", pmax_text)->required();
  table_cmd->add_option("--format", format)->check(CLI::IsMember({"tsv", "jsonl"}));
  table_cmd->add_flag("--summary", summary, "Append per-p counts of 2 vs 3");
  table_cmd->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 256u));
  flags.attach(table_cmd);

  std::string path;
  auto* verify_cmd = app.add_subcommand("verify", "Recheck a certificate JSON file ('-' = stdin)");
  verify_cmd->add_option("path", path)->required();

  std::vector<std::string> hc_args;
  auto* hc_cmd = app.add_subcommand("hc", "hc bound for a connected sum: hc p1 q1 [p2 q2 [p3 q3]]");
  hc_cmd->add_option("pairs", hc_args)->required()->expected(2, 6);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference computations");
  oracle_cmd->require_subcommand(1);
  std::string o_a, o_m;
  auto* o_qr = oracle_cmd->add_subcommand("qr", "Is a a square mod m?");
  o_qr->add_option("a", o_a)->required();
  o_qr->add_option("m", o_m)->required();
  std::string o_bound = "1000000";
  auto* o_n2 = oracle_cmd->add_subcommand("n2", "Scan for a one-hole witness");
  o_n2->add_option("p", p_text)->required();
  o_n2->add_option("q", q_text)->required();
  o_n2->add_option("--bound", o_bound);
  std::int64_t box = 5;
  auto* o_n3 = oracle_cmd->add_subcommand("n3", "Scan a box for a two-hole witness");
  o_n3->add_option("p", p_text)->required();
  o_n3->add_option("q", q_text)->required();
  o_n3->add_option("--box", box)->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 15));
  std::vector<std::string> form_args;
  std::int64_t form_bound = 60;
  auto* o_form = oracle_cmd->add_subcommand("form", "Primitive representation: form A B C n");
  o_form->add_option("coefficients", form_args, "A B C n")->required()->expected(4);
  o_form->add_option("--bound", form_bound)->check(CLI::Range(std::int64_t{0}, std::int64_t{1} << 15));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (*analyze_cmd) {
      return guarded(err, [&] { return analyze(p_text, q_text, flags, trace, as_json, out); });
    }
    if (*table_cmd) {
      return guarded(err, [&] { return table(pmax_text, flags, format, summary, jobs, out); });
    }
    if (*verify_cmd) {
      return guarded(err, [&] { return verify_certificate(path, in, out, err); });
    }
    if (*hc_cmd) {
      return guarded(err, [&] {
        if (hc_args.size() % 2 != 0) {
          throw UsageError("hc expects (p, q) pairs");
        }
        std::vector<LensSpace> summands;
        for (std::size_t i = 0; i < hc_args.size(); i += 2) {
          summands.push_back(lens_argument(hc_args[i], hc_args[i + 1]));
        }
        const auto bound = hc_upper_bound_connected_sum(summands);
        if (bound) {
          out << "hc <= " << *bound << "\n";
        } else {
          out << "no bound\n";
        }
        return int{kOk};
      });
    }
    if (*o_qr) {
      return guarded(err, [&] {
        out << (oracle::brute_qr(int_argument(o_a), int_argument(o_m)) ? "true" : "false") << "\n";
        return int{kOk};
      });
    }
    if (*o_n2) {
      return guarded(err, [&] {
        const auto hit = oracle::brute_n2(lens_argument(p_text, q_text), int_argument(o_bound));
        if (hit) {
          out << "a=" << hit->a << " t=" << hit->t << "\n";
        } else {
          out << "none\n";
        }
        return int{kOk};
      });
    }
    if (*o_n3) {
      return guarded(err, [&] {
        const auto hit = oracle::brute_n3(lens_argument(p_text, q_text), box);
        if (hit) {
          print_witness(*hit, out);
        } else {
          out << "none\n";
        }
        return int{kOk};
      });
    }
    if (*o_form) {
      return guarded(err, [&] {
        const QuadForm f{int_argument(form_args[0]), int_argument(form_args[1]),
                         int_argument(form_args[2])};
        const auto hit = oracle::brute_form_represents(f, int_argument(form_args[3]), form_bound);
        if (hit) {
          out << "x=" << hit->x << " y=" << hit->y << "\n";
        } else {
          out << "none\n";
        }
        return int{kOk};
      });
    }
  } catch (const CertificateFormatError&) {
    return kDataError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace lenscob::cli
