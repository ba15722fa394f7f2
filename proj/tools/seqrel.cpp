#include "seqrel/io.hpp"

#include <CLI11.hpp>

#include <iostream>

using namespace seqrel;

namespace {

constexpr int kParseError = 2;
constexpr int kBoundExceeded = 3;

struct InputOptions {
  std::string generator;
  std::size_t dim = 2;
  std::string table;
  std::string input;
  std::string field;
  std::string order;
};

struct BoundOptions {
  std::string bound;
  int degree = -1;
  std::string terms;
};

struct OutputOptions {
  std::string format = "json";
  bool trace = false;
};

json load_input_json(const InputOptions& in) {
  if (!in.table.empty()) return read_json_file(in.table);
  if (!in.input.empty()) return read_json_file(in.input);
  return {{"generator", in.generator}, {"params", {{"dim", in.dim}}}};
}

AnyField choose_field(const InputOptions& in, const json& j) {
  if (!in.field.empty()) return parse_field_spec(in.field);
  if (j.contains("field")) return parse_field_spec(j.at("field").get<std::string>());
  if (j.contains("generator")) return j.at("generator") == "sq" ? AnyField(RationalField{}) : AnyField(PrimeField(65537));
  if (j.contains("ideal")) return RationalField{};
  return PrimeField(65537);
}

MonomialOrder default_order(std::size_t n) {
  if (n == 1) return MonomialOrder::parse("drl(x)");
  if (n == 2) return MonomialOrder::parse("drl(y<x)");
  if (n == 3) return MonomialOrder::parse("drl(z<y<x)");
  std::string s = "drl(";
  for (std::size_t i = n; i >= 1; --i) s += "x" + std::to_string(i) + (i > 1 ? "<" : ")");
  return MonomialOrder::parse(s);
}

MonomialOrder choose_order(const InputOptions& in, const json& j, std::size_t dim) {
  if (!in.order.empty()) return MonomialOrder::parse(in.order);
  if (j.contains("ideal")) return MonomialOrder::parse(j.at("ideal").at("order").get<std::string>());
  return default_order(dim);
}

std::vector<unsigned> max_exponents(const MonomialSet& s, std::size_t n) {
  std::vector<unsigned> e(n, 0);
  for (const auto& m : s)
    for (std::size_t k = 0; k < n; ++k) e[k] = std::max(e[k], m[k]);
  return e;
}

// Table shape that is enough for one run, from the bound alone.
std::vector<unsigned> needed_shape(std::string_view algo, const MonomialOrder& ord, const std::optional<Monomial>& M,
                                   const MonomialSet& T) {
  std::size_t n = ord.nvars();
  std::vector<unsigned> e;
  if (is_bms_family(algo)) {
    e = max_exponents(enumerate_up_to(*M, ord), n);
    if (algo == "rank")
      for (auto& v : e) v *= 2;
  } else {
    e = max_exponents(T, n);
    for (auto& v : e) v = 2 * v + (algo == "sfglm-tweaked" ? 1 : 0);
  }
  for (auto& v : e) ++v;
  return e;
}

std::string shape_text(const std::vector<unsigned>& s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? ", " : "") + std::to_string(s[i]);
  return out + ")";
}

struct ResolvedBound {
  std::optional<Monomial> M;
  MonomialSet T;
};

ResolvedBound resolve_bound(std::string_view algo, const BoundOptions& b, const MonomialOrder& ord) {
  ResolvedBound r;
  if (is_bms_family(algo)) {
    if (b.bound.empty()) throw InputError(std::string(algo) + " needs --bound");
    r.M = parse_monomial(b.bound, ord);
  } else {
    if (!b.terms.empty())
      r.T = parse_monomial_list(b.terms, ord);
    else if (b.degree >= 0)
      r.T = monomials_up_to_degree(static_cast<unsigned>(b.degree), ord);
    else
      throw InputError(std::string(algo) + " needs --degree or --terms");
  }
  return r;
}

std::string relation_text(const json& rs) {
  std::ostringstream os;
  os << rs.at("algorithm").get<std::string>() << "  order " << rs.at("order").get<std::string>() << "\n";
  std::size_t w = 0;
  for (const auto& r : rs.at("relations")) w = std::max(w, r.at("poly").get<std::string>().size());
  for (const auto& r : rs.at("relations")) {
    std::string p = r.at("poly").get<std::string>();
    os << "  " << p << std::string(w - p.size(), ' ') << "  shift ";
    os << (r.at("shift").is_null() ? std::string("0") : r.at("shift").get<std::string>()) << "\n";
  }
  auto join = [](const json& a) {
    std::string s;
    for (const auto& m : a) s += (s.empty() ? "" : ", ") + m.get<std::string>();
    return "{" + s + "}";
  };
  os << "  staircase " << join(rs.at("staircase")) << "\n";
  if (!rs.at("open_relations").empty()) os << "  open " << join(rs.at("open_relations")) << "\n";
  if (rs.contains("certified_shift_set")) os << "  shift set " << join(rs.at("certified_shift_set")) << "\n";
  os << "  queries " << rs.at("queries") << "  mults " << rs.at("ops").at("basic") << "  adds "
     << rs.at("ops").at("adds") << "\n";
  return os.str();
}

template <class F>
int do_run(const F& field, const json& src, const InputOptions& in, const std::string& algo, const BoundOptions& bo,
           const OutputOptions& out) {
  auto oracle = oracle_from_json(src, field);
  MonomialOrder ord = choose_order(in, src, oracle.dim());
  if (ord.nvars() != oracle.dim()) throw InputError("order has " + std::to_string(ord.nvars()) + " variables, sequence has " + std::to_string(oracle.dim()));
  auto b = resolve_bound(algo, bo, ord);
  try {
    std::vector<TraceEvent> trace;
    json j;
    if (algo == "sfglm" || algo == "sfglm-tweaked") {
      auto r = run_sfglm(oracle, ord, b.T, algo == "sfglm-tweaked");
      j = to_json(as_relation_set(r, ord, algo == "sfglm-tweaked"));
      j["useful_staircase"] = monomials_to_json(r.useful_staircase, ord);
      j["gb"] = to_json(r, ord, algo == "sfglm-tweaked").at("gb");
      j["rejected"] = to_json(r, ord, algo == "sfglm-tweaked").at("rejected");
    } else {
      j = to_json(run_algorithm(algo, oracle, ord, b.M, b.T, out.trace ? &trace : nullptr));
    }
    std::string trace_text = out.trace ? format_trace(trace, ord) : "";
    if (out.format == "text") {
      if (out.trace) std::cout << trace_text;
      std::cout << relation_text(j);
    } else {
      if (out.trace) {
        json lines = json::array();
        std::istringstream is(trace_text);
        for (std::string line; std::getline(is, line);) lines.push_back(line);
        j["trace"] = std::move(lines);
      }
      std::cout << j.dump(2) << "\n";
    }
    return 0;
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "; this run needs a table of shape at least "
              << shape_text(needed_shape(algo, ord, b.M, b.T)) << "\n";
    return kBoundExceeded;
  }
}

template <class F>
int do_compare(const F& field, const json& src, const InputOptions& in, const std::vector<std::string>& algos,
               const BoundOptions& bo, const OutputOptions& out) {
  auto oracle = oracle_from_json(src, field);
  MonomialOrder ord = choose_order(in, src, oracle.dim());
  std::vector<RelationSet<typename F::Element>> runs;
  for (const auto& a : algos) {
    auto b = resolve_bound(a, bo, ord);
    try {
      runs.push_back(run_algorithm(a, oracle, ord, b.M, b.T));
    } catch (const BoundExceeded& e) {
      std::cerr << "error: " << e.what() << "; " << a << " needs a table of shape at least "
                << shape_text(needed_shape(a, ord, b.M, b.T)) << "\n";
      return kBoundExceeded;
    }
  }
  auto rep = compare_runs(oracle, std::move(runs));
  json j = to_json(rep);
  if (out.format == "text") {
    for (const auto& r : j.at("runs")) {
      std::cout << relation_text(r);
      std::cout << "  zero-dimensional " << (r.at("zero_dimensional").get<bool>() ? "yes" : "no") << "  certified "
                << (r.at("certified").get<bool>() ? "yes" : "no") << "\n";
    }
    for (const auto& c : j.at("containment"))
      std::cout << "ideal(" << c.at("small").get<std::string>() << ") in ideal(" << c.at("big").get<std::string>()
                << "): " << (c.at("contained").get<bool>() ? "yes" : "no") << "\n";
    std::cout << "equal ideals (degree window " << rep.window << "): " << (j.at("equal_ideals").get<bool>() ? "yes" : "no") << "\n";
  } else {
    std::cout << j.dump(2) << "\n";
  }
  return 0;
}

std::pair<unsigned, unsigned> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      unsigned d = static_cast<unsigned>(std::stoul(s));
      return {d, d};
    }
    return {static_cast<unsigned>(std::stoul(s.substr(0, dots))), static_cast<unsigned>(std::stoul(s.substr(dots + 2)))};
  } catch (const std::exception&) {
    throw InputError("bad degree range '" + s + "' (expected a..b)");
  }
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s + ",") {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  return out;
}

void check_algos(const std::vector<std::string>& algos) {
  auto known = algorithm_names();
  for (const auto& a : algos)
    if (std::find(known.begin(), known.end(), a) == known.end()) throw InputError("unknown algorithm '" + a + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Linear recurrence relations of multi-dimensional sequences"};
  app.require_subcommand(1);

  InputOptions in;
  BoundOptions bo;
  OutputOptions out;
  std::string algo = "bms";
  std::string algos_text = "bms,sfglm";

  auto add_input = [&](CLI::App* c) {
    auto* g = c->add_option("--generator", in.generator, "built-in sequence");
    auto* t = c->add_option("--table", in.table, "finite table JSON file");
    auto* i = c->add_option("--input", in.input, "generator or ideal spec JSON file");
    g->excludes(t)->excludes(i);
    t->excludes(i);
    c->add_option("--dim", in.dim, "dimension of the zero generator");
    c->add_option("--field", in.field, "Q or Fp:<prime>");
    c->add_option("--order", in.order, "drl(y<x), lex(z<y<x), weight([[1,1],[0,-1]];y<x)");
    c->add_option("--bound", bo.bound, "stopping monomial (BMS family)");
    c->add_option("--degree", bo.degree, "Scalar-FGLM terms: all monomials up to this degree");
    c->add_option("--terms", bo.terms, "Scalar-FGLM terms as a list, e.g. \"1,y,x,y^2\"");
    c->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };

  auto* run = app.add_subcommand("run", "run one algorithm");
  add_input(run);
  run->add_option("--algo", algo, "bms, bms-linalg, bms-tweaked, rank, sfglm, sfglm-tweaked");
  run->add_flag("--trace", out.trace, "per-monomial BMS event log");

  auto* cmp = app.add_subcommand("compare", "run several algorithms and compare their ideals");
  add_input(cmp);
  cmp->add_option("--algos", algos_text, "comma-separated algorithms");

  FamilySpec fam;
  std::string family_text = "simplex", range_text = "2..6", bench_algos = "bms,sfglm", out_path;
  std::string bench_field = "Fp:65537";
  auto* bench = app.add_subcommand("bench", "query and operation counts on a family");
  bench->add_option("--family", family_text, "rectangle, lshape or simplex");
  bench->add_option("-n", fam.n, "dimension (2 or 3)");
  bench->add_option("-d", range_text, "degree range a..b");
  bench->add_option("--algos", bench_algos, "comma-separated algorithms");
  bench->add_option("--seed", fam.seed, "random seed");
  bench->add_option("--field", bench_field, "Q or Fp:<prime>");
  bench->add_option("--out", out_path, "CSV file (default stdout)");
  bool gnuplot = false;
  bench->add_flag("--gnuplot", gnuplot, "whitespace columns, one block per algorithm");

  std::string ideal_text, gor_order = "drl(y<x)", gor_field = "Fp:65537";
  unsigned trials = 10;
  std::uint64_t gor_seed = 1;
  auto* gor = app.add_subcommand("gorenstein", "probabilistic Gorenstein test of a zero-dimensional ideal");
  gor->add_option("--ideal", ideal_text, "Groebner basis, e.g. \"x^2,x*y,y^2\"")->required();
  gor->add_option("--order", gor_order, "monomial order");
  gor->add_option("--trials", trials, "number of random sequences");
  gor->add_option("--seed", gor_seed, "random seed");
  gor->add_option("--field", gor_field, "Q or Fp:<prime>");
  gor->add_option("--format", out.format, "json or text")->check(CLI::IsMember({"json", "text"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kParseError;
  }

  try {
    if (*run || *cmp) {
      if (in.generator.empty() && in.table.empty() && in.input.empty())
        throw InputError("one of --generator, --table, --input is required");
      json src = load_input_json(in);
      AnyField field = choose_field(in, src);
      if (*run) {
        check_algos({algo});
        return std::visit([&](const auto& f) { return do_run(f, src, in, algo, bo, out); }, field);
      }
      auto algos = split_list(algos_text);
      check_algos(algos);
      return std::visit([&](const auto& f) { return do_compare(f, src, in, algos, bo, out); }, field);
    }
    if (*bench) {
      fam.family = parse_family(family_text);
      auto [lo, hi] = parse_range(range_text);
      auto algos = split_list(bench_algos);
      check_algos(algos);
      AnyField field = parse_field_spec(bench_field);
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw InputError("cannot write " + out_path);
      }
      std::ostream& os = out_path.empty() ? std::cout : file;
      std::vector<BenchRow> rows;
      if (!gnuplot) write_bench_header(os);
      for (unsigned d = lo; d <= hi && lo <= hi; ++d)
        for (const auto& a : algos) {
          FamilySpec s = fam;
          s.d = d;
          auto row = std::visit([&](const auto& f) { return bench_one(s, f, a); }, field);
          if (gnuplot)
            rows.push_back(std::move(row));
          else
            write_bench_row(os, row);
        }
      if (gnuplot) write_gnuplot(os, rows, algos);
      return 0;
    }
    if (*gor) {
      MonomialOrder ord = MonomialOrder::parse(gor_order);
      AnyField field = parse_field_spec(gor_field);
      return std::visit(
          [&](const auto& f) {
            auto J = parse_poly_list(ideal_text, ord, f);
            auto rep = gorenstein_test(J, ord, f, trials, gor_seed);
            if (out.format == "text") {
              std::cout << to_string(rep.verdict) << "\n";
              for (const auto& t : rep.trials) {
                std::cout << "  seed " << t.seed << "  rank " << t.rank << " of " << rep.staircase_size << " ";
                for (std::size_t i = 0; i < t.found.size(); ++i) std::cout << (i ? ", " : " ") << format_poly(t.found[i], ord);
                std::cout << "\n";
              }
            } else {
              std::cout << to_json(rep, ord).dump(2) << "\n";
            }
            return 0;
          },
          field);
    }
  } catch (const BoundExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBoundExceeded;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const OrderError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const PolyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const FieldError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const SequenceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
