#include "seqrel/compare.hpp"

#include <iomanip>

namespace seqrel {

std::string family_name(Family f) {
  switch (f) {
    case Family::Rectangle:
      return "rectangle";
    case Family::LShape:
      return "lshape";
    case Family::Simplex:
      return "simplex";
  }
  return "simplex";
}

Family parse_family(std::string_view s) {
  std::string v(s);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "rectangle") return Family::Rectangle;
  if (v == "lshape" || v == "l-shape") return Family::LShape;
  if (v == "simplex") return Family::Simplex;
  throw std::invalid_argument("unknown family '" + std::string(s) + "' (rectangle, lshape, simplex)");
}

MonomialOrder family_order(unsigned n) {
  if (n == 2) return MonomialOrder::parse("drl(y<x)");
  if (n == 3) return MonomialOrder::parse("drl(z<y<x)");
  throw std::invalid_argument("families are defined for n = 2 or 3");
}

MonomialSet family_lms(const FamilySpec& spec, const MonomialOrder& ord) {
  unsigned n = spec.n, d = spec.d;
  auto pure = [&](std::size_t var, unsigned e) {
    Monomial m(n);
    m.set(var, std::max(e, 1u));
    return m;
  };
  MonomialSet out;
  switch (spec.family) {
    case Family::Rectangle:
      out.push_back(pure(0, d));
      out.push_back(pure(1, d / 2));
      if (n == 3) out.push_back(pure(2, (d + 2) / 3));
      break;
    case Family::LShape:
      for (std::size_t i = 0; i < n; ++i) {
        out.push_back(pure(i, d));
        for (std::size_t j = i + 1; j < n; ++j) out.push_back(variable(n, i) * variable(n, j));
      }
      break;
    case Family::Simplex:
      for (const auto& m : monomials_up_to_degree(d, ord))
        if (m.degree() == d) out.push_back(m);
      break;
  }
  return sorted_unique(std::move(out), ord);
}

std::vector<std::string> algorithm_names() {
  return {"bms", "bms-linalg", "bms-tweaked", "rank", "sfglm", "sfglm-tweaked"};
}

bool is_bms_family(std::string_view algo) { return algo == "bms" || algo == "bms-linalg" || algo == "bms-tweaked" || algo == "rank"; }

void write_bench_header(std::ostream& os) {
  os << "family,n,d,algorithm,queries,mults,adds,staircase_size,dmax,wall_ms\n";
}

void write_bench_row(std::ostream& os, const BenchRow& r) {
  os << r.family << ',' << r.n << ',' << r.d << ',' << r.algorithm << ',' << r.queries << ',' << r.mults << ','
     << r.adds << ',' << r.staircase_size << ',' << r.dmax << ',' << std::fixed << std::setprecision(3) << r.wall_ms
     << std::defaultfloat << '\n';
}

void write_gnuplot(std::ostream& os, const std::vector<BenchRow>& rows, const std::vector<std::string>& algos) {
  for (std::size_t k = 0; k < algos.size(); ++k) {
    if (k) os << "\n\n";
    os << "# " << algos[k] << "\n# d queries mults staircase_size mults/S^3\n";
    for (const auto& r : rows) {
      if (r.algorithm != algos[k]) continue;
      double s3 = double(r.staircase_size) * r.staircase_size * r.staircase_size;
      os << r.d << ' ' << r.queries << ' ' << r.mults << ' ' << r.staircase_size << ' ' << std::setprecision(6)
         << r.mults / s3 << std::defaultfloat << '\n';
    }
  }
}

}  // namespace seqrel
