#include "anyonlab/cli.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "anyonlab/dynamics.hpp"
#include "anyonlab/error.hpp"

namespace anyonlab {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "";
  std::ostringstream os;
  os << *v;
  return os.str();
}

struct CodeArgs {
  std::optional<std::int64_t> alpha_bar, beta_bar, a, b;
  std::string f, g;

  void add_to(CLI::App* app) {
    app->add_option("--alpha-bar", alpha_bar, "exponent of x in the third term of f");
    app->add_option("--beta-bar", beta_bar, "exponent of y in the third term of g");
    app->add_option("--a", a, "exponent of x in the third term of g");
    app->add_option("--b", b, "exponent of y in the third term of f");
    app->add_option("--f", f, "check polynomial f, e.g. \"1+x+x^-1*y^3\"");
    app->add_option("--g", g, "check polynomial g");
  }

  bool given() const { return alpha_bar || beta_bar || a || b || !f.empty() || !g.empty(); }

  BBCode code() const {
    const bool params = alpha_bar || beta_bar || a || b;
    const bool polys = !f.empty() || !g.empty();
    if (params && polys) throw InvalidInput("give either --alpha-bar/--beta-bar/--a/--b or --f/--g, not both");
    if (polys) {
      if (f.empty() || g.empty()) throw InvalidInput("both --f and --g are required");
      return BBCode::from_polys(parse_poly(f), parse_poly(g));
    }
    if (!(alpha_bar && beta_bar && a && b)) throw InvalidInput("--alpha-bar, --beta-bar, --a and --b are all required");
    return BBCode::from_params({*alpha_bar, *beta_bar, *a, *b});
  }
};

struct CapArgs {
  std::size_t pair_cap = BuchbergerOptions{}.pair_cap;
  std::uint64_t period_cap = Caps{}.period;
  std::uint64_t size_sequence_cap = Caps{}.size_sequence_period;
  std::size_t divisor_pair_cap = Caps{}.divisor_pairs;
  std::size_t matrix_cap = Caps{}.matrix;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  void add_to(CLI::App* app) {
    app->add_option("--pair-cap", pair_cap, "Buchberger pair-queue cap")->check(CLI::PositiveNumber);
    app->add_option("--period-cap", period_cap, "largest anyon period searched for mobility generators")
        ->check(CLI::PositiveNumber);
    app->add_option("--size-sequence-cap", size_sequence_cap, "largest anyon period for size sequences")
        ->check(CLI::PositiveNumber);
    app->add_option("--divisor-pair-cap", divisor_pair_cap, "largest divisor grid for size sequences")
        ->check(CLI::PositiveNumber);
    app->add_option("--matrix-cap", matrix_cap, "largest l*m for the matrix oracles")->check(CLI::PositiveNumber);
    app->add_option("--jobs", jobs, "worker threads for scan and verify")->check(CLI::PositiveNumber);
  }

  Caps caps() const {
    Caps c;
    c.groebner.pair_cap = pair_cap;
    c.period = period_cap;
    c.size_sequence_period = size_sequence_cap;
    c.divisor_pairs = divisor_pair_cap;
    c.matrix = matrix_cap;
    return c;
  }
};

void print_report_text(const CodeReport& r, std::ostream& out) {
  out << "code: " << r.code.label() << "\n";
  out << "f: " << print_poly(r.code.f()) << "\ng: " << print_poly(r.code.g()) << "\n";
  out << "topological: " << (r.topological ? "true" : "false") << "\n";
  if (!r.topological) return;
  out << "Q: " << *r.q << "\n";
  out << "anyon_count: " << anyon_count(*r.q) << "\n";
  if (r.closed_form) {
    const auto& c = *r.closed_form;
    out << "q_closed_form: " << c.q << " [" << quadrant_name(c.regime.quadrant) << ", " << c.regime.tag << "] "
        << (c.valid ? "valid" : "not valid") << "\n";
  }
  if (r.mv) out << "mv_bound: " << *r.mv << "\n";
  out << "k_max: " << 2 * *r.q << "\n";
  if (r.periods) out << "periods: (" << r.periods->l0 << ", " << r.periods->m0 << ")\n";
  if (r.mobility) {
    out << "mobility_x: " << print_generators(r.mobility->x_presentation) << "\n";
    out << "mobility_y: " << print_generators(r.mobility->y_presentation) << "\n";
  }
  if (r.size_sequences) {
    out << "size_sequences:\n";
    for (const auto& c : *r.size_sequences) out << "  " << c.gcd_class << ": k=" << c.k << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
}

void print_torus_text(const TorusRecord& r, std::ostream& out) {
  out << "[[" << r.n << "," << r.k << "]]\n";
  if (r.checks) {
    const auto& c = *r.checks;
    auto line = [&](const char* name, const std::optional<std::size_t>& v, std::size_t expect) {
      out << name << ": ";
      if (!v)
        out << "skipped\n";
      else
        out << (*v == expect ? "pass" : "FAIL") << " (" << *v << ")\n";
    };
    line("rank_oracle", c.rank_oracle, r.k);
    line("koszul", c.koszul, r.k);
    out << "gcd_reduction: " << (!c.gcd_reduction ? "skipped" : *c.gcd_reduction ? "pass" : "FAIL") << "\n";
    out << "kernel_dim: ";
    if (!c.kernel_dim)
      out << "skipped\n";
    else
      out << (2 * *c.kernel_dim == r.k ? "pass" : "FAIL") << " (" << *c.kernel_dim << ")\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
}

std::string scan_row(const BBParams& p, const Caps& caps, const std::optional<TorusSpec>& t, bool jsonl) {
  const std::int64_t alpha = -p.alpha_bar, beta = -p.beta_bar;
  std::string error;
  std::optional<CodeReport> rep;
  std::optional<std::size_t> k;
  try {
    rep = analyze(BBCode::from_params(p), caps, false);
    if (t) k = logical_count(BBCode::from_params(p), *t, caps.groebner);
  } catch (const Error& e) {
    error = e.what();
  }
  if (jsonl) {
    nlohmann::json j;
    j["alpha"] = alpha;
    j["beta"] = beta;
    j["a"] = p.a;
    j["b"] = p.b;
    if (rep) {
      const nlohmann::json full = to_json(*rep);
      for (const char* key : {"topological", "Q", "q_closed_form", "mv_bound", "periods", "mobility"}) j[key] = full[key];
    }
    if (t) {
      j["l"] = t->l;
      j["m"] = t->m;
      j["k"] = k ? nlohmann::json(*k) : nlohmann::json(nullptr);
    }
    j["error"] = error.empty() ? nlohmann::json(nullptr) : nlohmann::json(error);
    return j.dump();
  }
  std::vector<std::string> f{std::to_string(alpha), std::to_string(beta), std::to_string(p.a), std::to_string(p.b)};
  if (rep) {
    const auto& r = *rep;
    f.push_back(r.topological ? "true" : "false");
    f.push_back(opt_text(r.q));
    f.push_back(r.periods ? std::to_string(r.periods->l0) : "");
    f.push_back(r.periods ? std::to_string(r.periods->m0) : "");
    f.push_back(r.mobility ? print_generators(r.mobility->x_presentation) : "");
    f.push_back(r.mobility ? print_generators(r.mobility->y_presentation) : "");
    f.push_back(r.closed_form ? std::to_string(r.closed_form->q) : "");
    f.push_back(r.closed_form ? (r.closed_form->valid ? "true" : "false") : "");
    f.push_back(r.closed_form ? r.closed_form->regime.tag : "");
    f.push_back(opt_text(r.mv));
  } else {
    f.resize(f.size() + 10);
  }
  if (t) {
    f.push_back(std::to_string(t->l));
    f.push_back(std::to_string(t->m));
    f.push_back(opt_text(k));
  }
  f.push_back(error);
  std::string line;
  for (std::size_t i = 0; i < f.size(); ++i) line += (i ? "," : "") + csv_field(f[i]);
  return line;
}

struct CheckResult {
  std::string name;
  enum { pass, fail, skip } status;
  std::string detail;
};

std::vector<CheckResult> verify_one(const BBCode& code, const VerifyOptions& opts) {
  std::vector<CheckResult> out;
  const std::string who = code.label();
  auto record = [&](const std::string& name, bool ok, const std::string& detail = "") {
    out.push_back({name, ok ? CheckResult::pass : CheckResult::fail, ok ? "" : who + ": " + detail});
  };
  // Runs fn, turning library errors into a failed (or skipped) check.
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      fn();
    } catch (const CapExceeded& e) {
      out.push_back({name, CheckResult::skip, who + ": " + e.what()});
    } catch (const Error& e) {
      record(name, false, e.what());
    }
  };
  const Caps& caps = opts.caps;

  bool topo = false;
  guarded("topological_condition", [&] {
    topo = is_topological(code, caps.groebner);
    record("topological_condition", true);
  });

  std::optional<std::size_t> q;
  std::optional<AnyonPeriods> per;
  if (topo) {
    guarded("groebner_certificate", [&] {
      const GroebnerBasis g = infinite_basis(code, MonomialOrder::elimination_x(), caps.groebner);
      q = quotient_dim(g);
      record("groebner_certificate", verify_groebner(g), "basis fails the S-pair or reducedness check");
    });
    if (q && opts.expect_q) record("expected_q", *q == *opts.expect_q, "Q = " + std::to_string(*q) + ", expected " + std::to_string(*opts.expect_q));
    if (q && code.params()) {
      guarded("closed_form", [&] {
        const ClosedForm c = q_closed_form(*code.params());
        if (c.valid)
          record("closed_form", c.q == static_cast<std::int64_t>(*q),
                 "closed form " + std::to_string(c.q) + " vs Groebner " + std::to_string(*q));
      });
    }
    if (q) {
      guarded("bkk_bound", [&] {
        const std::int64_t mv = mv_bound(code);
        const bool faces = bkk_face_check(code.f(), code.g());
        const auto qq = static_cast<std::int64_t>(*q);
        record("bkk_bound", mv >= qq && (!faces || mv == qq),
               "MV " + std::to_string(mv) + ", Q " + std::to_string(*q) + ", face check " + (faces ? "passes" : "fails"));
      });
    }
    guarded("anyon_periods", [&] {
      per = anyon_periods(code, caps.groebner);
      record("anyon_periods", true);
    });
    if (per) {
      guarded("mobility_generators", [&] {
        const MobilitySublattice mob = mobility_generators(code, caps.period, caps.groebner);
        const QuotientRing ring = quotient_ring(code, caps.groebner);
        auto trivial = [&](LatticeVector v) {
          const GF2Matrix m = matrix_power(ring.mx, static_cast<std::uint64_t>(v.x)) *
                              matrix_power(ring.my, static_cast<std::uint64_t>(v.y));
          return m.apply(ring.one) == ring.one;
        };
        const bool ok = trivial(mob.x_presentation.first) && trivial(mob.x_presentation.second) &&
                        trivial(mob.y_presentation.first) && trivial(mob.y_presentation.second);
        record("mobility_generators", ok, "a generator acts nontrivially");
      });
      if (per->l0 > 1 && per->l0 <= 100'000) {
        guarded("charge_conservation", [&] {
          const HoppingTrace tr = hop_sequence(code, Axis::x, LaurentPoly::one(), 4 * per->l0 + 16, caps.groebner);
          charge_certificate(tr, code, caps.groebner);
          record("charge_conservation",
                 tr.complete && tr.terminal > 0 && static_cast<std::uint64_t>(tr.terminal) % per->l0 == 0,
                 "hop terminated at " + std::to_string(tr.terminal));
        });
      }
    }
  }

  std::optional<QuotientRing> ring;
  if (topo) {
    try {
      ring = quotient_ring(code, caps.groebner);
    } catch (const Error&) {
    }
  }
  for (auto l : opts.sizes)
    for (auto m : opts.sizes) {
      const TorusSpec t{l, m};
      const std::string at = " at " + std::to_string(l) + "x" + std::to_string(m);
      std::optional<std::size_t> k;
      guarded("logical_count", [&] { k = logical_count(code, t, caps.groebner); });
      if (!k) continue;
      const std::string ks = "k = " + std::to_string(*k);
      guarded("rank_oracle", [&] {
        const auto r = rank_oracle_k(code, t, caps.matrix);
        record("rank_oracle", r == *k, ks + ", rank oracle " + std::to_string(r) + at);
      });
      guarded("kernel_dim", [&] {
        const auto d = subsystem_symmetry_kernel_dim(code, t, caps.matrix);
        record("kernel_dim", 2 * d == *k, ks + ", kernel " + std::to_string(d) + at);
      });
      if (topo && q) {
        record("k_bound", *k <= 2 * *q, ks + " > 2Q" + at);
        if (ring) {
          guarded("koszul", [&] {
            const auto h = koszul_homology_dim(*ring, t);
            record("koszul", h == *k, ks + ", Koszul " + std::to_string(h) + at);
          });
        }
        if (per) {
          guarded("gcd_reduction", [&] {
            record("gcd_reduction", gcd_reduction_check(code, t, *per, caps.groebner),
                   "k(l,m) differs from k(gcd(l,l0),gcd(m,m0))" + at);
          });
        }
      }
    }
  return out;
}

int run_guarded(std::ostream& err, const std::function<int()>& fn) {
  try {
    return fn();
  } catch (const CapExceeded& e) {
    err << "error: resource cap exceeded: " << e.what() << "\n";
    return exit_cap;
  } catch (const InvalidInput& e) {
    err << "error: invalid input: " << e.what() << "\n";
    return exit_invalid;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  } catch (const Error& e) {
    err << "error: internal check failed: " << e.what() << "\n";
    return exit_verification;
  }
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InvalidInput("cannot open " + path + " for writing");
  f << content;
}

}  // namespace

std::vector<std::int64_t> Range::values() const {
  std::vector<std::int64_t> out;
  for (auto v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

Range parse_range(const std::string& text) {
  auto num = [&](const std::string& s) {
    std::size_t pos = 0;
    long long v = 0;
    try {
      v = std::stoll(s, &pos);
    } catch (const std::exception&) {
      throw InvalidInput("bad range \"" + text + "\"");
    }
    if (pos != s.size()) throw InvalidInput("bad range \"" + text + "\"");
    return static_cast<std::int64_t>(v);
  };
  const auto colon = text.find(':', text.empty() || text[0] != '-' ? 0 : 1);
  if (colon == std::string::npos) {
    const auto v = num(text);
    return {v, v};
  }
  return {num(text.substr(0, colon)), num(text.substr(colon + 1))};
}

std::vector<BBParams> scan_params(const ScanSpec& spec) {
  std::vector<BBParams> out;
  for (auto al : spec.alpha.values())
    for (auto be : spec.beta.values())
      for (auto a : spec.a.values())
        for (auto b : spec.b.values()) out.push_back({-al, -be, a, b});
  return out;
}

void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& fn) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex mu;
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < jobs; ++w)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next++) < n;) {
        try {
          fn(i);
        } catch (...) {
          std::lock_guard lock(mu);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

std::string scan_header(const ScanSpec& spec) {
  std::string h = "alpha,beta,a,b,topological,Q,l0,m0,x_generators,y_generators,q_closed_form,closed_form_valid,regime,mv_bound";
  if (spec.l && spec.m) h += ",l,m,k";
  return h + ",error";
}

std::vector<std::string> run_scan(const ScanSpec& spec) {
  const auto params = scan_params(spec);
  std::vector<std::optional<TorusSpec>> sizes{std::nullopt};
  if (spec.l && spec.m) {
    sizes.clear();
    for (auto l : spec.l->values())
      for (auto m : spec.m->values()) {
        if (l < 1 || m < 1) throw InvalidInput("torus sizes must be positive");
        sizes.push_back(TorusSpec{l, m});
      }
  }
  std::vector<std::string> rows(params.size() * sizes.size());
  parallel_for(rows.size(), spec.jobs, [&](std::size_t i) {
    rows[i] = scan_row(params[i / sizes.size()], spec.caps, sizes[i % sizes.size()], spec.jsonl);
  });
  return rows;
}

std::vector<CheckTally> verify_codes(const std::vector<BBCode>& codes, const VerifyOptions& opts) {
  std::vector<std::vector<CheckResult>> results(codes.size());
  parallel_for(codes.size(), opts.jobs, [&](std::size_t i) { results[i] = verify_one(codes[i], opts); });
  std::vector<CheckTally> tallies;
  std::map<std::string, std::size_t> index;
  for (const auto& rs : results)
    for (const auto& r : rs) {
      auto [it, inserted] = index.emplace(r.name, tallies.size());
      if (inserted) tallies.push_back({r.name, 0, 0, 0, {}});
      auto& t = tallies[it->second];
      if (r.status == CheckResult::pass) {
        ++t.passed;
      } else if (r.status == CheckResult::fail) {
        ++t.failed;
        t.failures.push_back(r.detail);
      } else {
        ++t.skipped;
        t.failures.push_back("skipped: " + r.detail);
      }
    }
  return tallies;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact algebra for bivariate-bicycle codes: topological order, anyon periods, torus logical counts"};
  app.set_config("--config", "", "TOML-style file with option defaults; command-line flags win");
  app.require_subcommand(1);
  CapArgs caps;
  caps.add_to(&app);

  CodeArgs code_args;
  bool json = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one code");
  analyze_cmd->fallthrough();
  code_args.add_to(analyze_cmd);
  analyze_cmd->add_flag("--json", json, "emit the JSON document");

  std::int64_t l = 0, m = 0;
  bool verify = false;
  auto* torus_cmd = app.add_subcommand("torus", "logical count on an l x m torus");
  torus_cmd->fallthrough();
  code_args.add_to(torus_cmd);
  torus_cmd->add_option("--l", l, "torus length along x")->required()->check(CLI::PositiveNumber);
  torus_cmd->add_option("--m", m, "torus length along y")->required()->check(CLI::PositiveNumber);
  torus_cmd->add_flag("--verify", verify, "run the rank, Koszul, gcd-reduction and kernel checks");
  torus_cmd->add_flag("--json", json, "emit JSON");

  std::string alpha_r = "0:2", beta_r = "0:2", a_r = "-3:3", b_r = "-3:3", l_r, m_r, format = "csv";
  auto* scan_cmd = app.add_subcommand("scan", "table of Q, periods and generators over a parameter grid");
  scan_cmd->fallthrough();
  scan_cmd->add_option("--alpha", alpha_r, "range lo:hi of alpha = -alpha_bar")->capture_default_str();
  scan_cmd->add_option("--beta", beta_r, "range lo:hi of beta = -beta_bar")->capture_default_str();
  scan_cmd->add_option("--a", a_r, "range lo:hi of a")->capture_default_str();
  scan_cmd->add_option("--b", b_r, "range lo:hi of b")->capture_default_str();
  scan_cmd->add_option("--l", l_r, "optional torus length range");
  scan_cmd->add_option("--m", m_r, "optional torus length range");
  scan_cmd->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}))->capture_default_str();

  std::string axis = "x", init = "1", csv_out, json_out, svg_out;
  std::size_t max_steps = 100'000;
  auto* hop_cmd = app.add_subcommand("hop", "hopping trace of an anyon along one axis");
  hop_cmd->fallthrough();
  code_args.add_to(hop_cmd);
  hop_cmd->add_option("--axis", axis, "x or y")->check(CLI::IsMember({"x", "y"}))->capture_default_str();
  hop_cmd->add_option("--init", init, "initial excitation pattern")->capture_default_str();
  hop_cmd->add_option("--max-steps", max_steps, "step cap")->capture_default_str();
  hop_cmd->add_option("--csv", csv_out, "write frames as CSV (step,x,y)");
  hop_cmd->add_option("--frames-json", json_out, "write frames as a JSON array");
  hop_cmd->add_option("--svg", svg_out, "write frames as SVG");
  hop_cmd->add_flag("--json", json, "emit the summary as JSON");

  std::string order = "x";
  auto* gb_cmd = app.add_subcommand("groebner", "reduced Groebner basis of the infinite or torus ideal");
  gb_cmd->fallthrough();
  code_args.add_to(gb_cmd);
  gb_cmd->add_option("--l", l, "torus length along x (with --m)");
  gb_cmd->add_option("--m", m, "torus length along y (with --l)");
  gb_cmd->add_option("--eliminate", order, "infinite case: x for ybar>xbar>y>x, y for xbar>ybar>x>y")
      ->check(CLI::IsMember({"x", "y"}))
      ->capture_default_str();
  gb_cmd->add_flag("--json", json, "emit JSON");

  bool grid = false;
  std::string sizes_text = "2,3,4,6,12";
  std::optional<std::size_t> expect_q;
  auto* verify_cmd = app.add_subcommand("verify", "run every cross-oracle check on a code or a grid");
  verify_cmd->fallthrough();
  code_args.add_to(verify_cmd);
  verify_cmd->add_flag("--grid", grid, "check the parameter grid given by --alpha/--beta/--a/--b ranges");
  verify_cmd->add_option("--alpha", alpha_r, "grid range of alpha")->capture_default_str();
  verify_cmd->add_option("--beta", beta_r, "grid range of beta")->capture_default_str();
  verify_cmd->add_option("--a-range", a_r, "grid range of a")->capture_default_str();
  verify_cmd->add_option("--b-range", b_r, "grid range of b")->capture_default_str();
  verify_cmd->add_option("--sizes", sizes_text, "comma-separated torus lengths")->capture_default_str();
  verify_cmd->add_option("--expect-q", expect_q, "also require Q to equal this value");
  verify_cmd->add_flag("--json", json, "emit the summary as JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (const CLI::CallForVersion&) {
    out << kSchema << "\n";
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_invalid;
  }

  const Caps c = caps.caps();
  return run_guarded(err, [&]() -> int {
    if (analyze_cmd->parsed()) {
      CodeReport r = analyze(code_args.code(), c);
      if (json)
        out << to_json(r).dump(2) << "\n";
      else
        print_report_text(r, out);
      return exit_ok;
    }
    if (torus_cmd->parsed()) {
      const BBCode code = code_args.code();
      const TorusRecord r = torus_record(code, {l, m}, verify, c);
      if (json) {
        nlohmann::json j{{"schema", kSchema}, {"code", code_json(code)}, {"torus", to_json(r)}};
        out << j.dump(2) << "\n";
      } else {
        print_torus_text(r, out);
      }
      return r.all_pass() ? exit_ok : exit_verification;
    }
    if (scan_cmd->parsed()) {
      ScanSpec spec;
      spec.alpha = parse_range(alpha_r);
      spec.beta = parse_range(beta_r);
      spec.a = parse_range(a_r);
      spec.b = parse_range(b_r);
      if (spec.alpha.lo < 0 || spec.beta.lo < 0) throw InvalidInput("alpha and beta must be nonnegative");
      if (l_r.empty() != m_r.empty()) throw InvalidInput("give both --l and --m ranges");
      if (!l_r.empty()) {
        spec.l = parse_range(l_r);
        spec.m = parse_range(m_r);
      }
      spec.jsonl = format == "jsonl";
      spec.jobs = caps.jobs;
      spec.caps = c;
      const auto rows = run_scan(spec);
      if (rows.empty()) return exit_ok;
      if (!spec.jsonl) out << scan_header(spec) << "\n";
      for (const auto& r : rows) out << r << "\n";
      return exit_ok;
    }
    if (hop_cmd->parsed()) {
      const BBCode code = code_args.code();
      const HoppingTrace tr =
          hop_sequence(code, axis == "x" ? Axis::x : Axis::y, parse_poly(init), max_steps, c.groebner);
      const LaurentPoly charge = charge_certificate(tr, code, c.groebner);
      if (!csv_out.empty()) write_file(csv_out, patterns_csv(tr.patterns));
      if (!json_out.empty()) write_file(json_out, patterns_json(tr.patterns).dump() + "\n");
      if (!svg_out.empty()) write_file(svg_out, patterns_svg(tr.patterns));
      if (!tr.complete) err << "warning: trace incomplete after " << max_steps << " steps\n";
      const char* var = axis == "x" ? "x" : "y";
      if (json) {
        nlohmann::json j{{"schema", kSchema},
                         {"code", code_json(code)},
                         {"axis", axis},
                         {"h", print_uni(tr.h, var[0])},
                         {"status", tr.complete ? "complete" : "incomplete"},
                         {"steps", tr.patterns.size() - 1},
                         {"terminal", tr.complete ? nlohmann::json(tr.terminal) : nlohmann::json(nullptr)},
                         {"charge", print_poly(charge)},
                         {"frames", patterns_json(tr.patterns)}};
        out << j.dump(2) << "\n";
      } else {
        out << "h: " << print_uni(tr.h, var[0]) << "\n";
        for (const auto& p : tr.patterns) out << "t" << p.t << ": " << print_poly(p.support) << "\n";
        out << "status: " << (tr.complete ? "complete" : "incomplete") << "\n";
        if (tr.complete) out << "terminal: " << var << "^" << tr.terminal << "\n";
        out << "charge: " << print_poly(charge) << "\n";
      }
      return exit_ok;
    }
    if (gb_cmd->parsed()) {
      const BBCode code = code_args.code();
      if ((l > 0) != (m > 0)) throw InvalidInput("give both --l and --m");
      if (l < 0 || m < 0) throw InvalidInput("torus sizes must be positive");
      const GroebnerBasis g = l > 0 ? torus_basis(code, {l, m}, c.groebner)
                                    : infinite_basis(code,
                                                     order == "x" ? MonomialOrder::elimination_x()
                                                                  : MonomialOrder::elimination_y(),
                                                     c.groebner);
      if (json) {
        nlohmann::json j = groebner_json(g);
        j["schema"] = kSchema;
        j["code"] = code_json(code);
        out << j.dump(2) << "\n";
      } else {
        out << "# order " << g.order.describe() << "\n";
        for (const auto& e : g.elements) out << print_affine(e, g.order) << "\n";
      }
      return exit_ok;
    }
    // verify
    VerifyOptions vo;
    vo.caps = c;
    vo.jobs = caps.jobs;
    vo.expect_q = expect_q;
    vo.sizes.clear();
    std::stringstream ss(sizes_text);
    for (std::string item; std::getline(ss, item, ',');) {
      const Range r = parse_range(item);
      if (r.lo != r.hi || r.lo < 1) throw InvalidInput("bad torus length \"" + item + "\"");
      vo.sizes.push_back(r.lo);
    }
    std::vector<BBCode> codes;
    if (code_args.given()) {
      if (grid) throw InvalidInput("give either a code or --grid");
      codes.push_back(code_args.code());
    } else {
      ScanSpec spec;
      spec.alpha = parse_range(alpha_r);
      spec.beta = parse_range(beta_r);
      spec.a = parse_range(a_r);
      spec.b = parse_range(b_r);
      for (const auto& p : scan_params(spec)) codes.push_back(BBCode::from_params(p));
    }
    const auto tallies = verify_codes(codes, vo);
    bool ok = true;
    for (const auto& t : tallies) ok = ok && t.failed == 0;
    if (json) {
      nlohmann::json j{{"schema", kSchema}, {"codes", codes.size()}, {"ok", ok}};
      nlohmann::json arr = nlohmann::json::array();
      for (const auto& t : tallies)
        arr.push_back({{"check", t.name}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped},
                       {"failures", t.failures}});
      j["checks"] = arr;
      out << j.dump(2) << "\n";
    } else {
      out << "codes: " << codes.size() << "\n";
      for (const auto& t : tallies) {
        out << t.name << ": passed " << t.passed << ", failed " << t.failed;
        if (t.skipped) out << ", skipped " << t.skipped;
        out << "\n";
        for (const auto& f : t.failures) out << "  " << f << "\n";
      }
      out << (ok ? "all checks passed" : "verification FAILED") << "\n";
    }
    return ok ? exit_ok : exit_verification;
  });
}

}  // namespace anyonlab
