#include "hilbk3/report.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hilbk3/bb_lattice.hpp"
#include "hilbk3/certify.hpp"
#include "hilbk3/frobenius.hpp"
#include "hilbk3/invariant_ideals.hpp"
#include "hilbk3/partitions.hpp"

namespace hilbk3::report {

namespace {

// Collects the pieces of one report; status is derived from the checks.
class Builder {
 public:
  Builder(std::string command, json params) : command_(std::move(command)), params_(std::move(params)) {}

  void step(const std::string& name, const std::string& formula, json detail = nullptr) {
    json s = {{"step", name}, {"formula", formula}};
    if (!detail.is_null()) s["detail"] = std::move(detail);
    audit_.push_back(std::move(s));
  }

  void check(const std::string& name, bool pass) {
    checks_.push_back({{"name", name}, {"pass", pass}});
    ok_ = ok_ && pass;
  }

  json finish(json result) const {
    return {{"schema", kSchema},      {"command", command_}, {"params", params_},
            {"result", std::move(result)}, {"audit", audit_}, {"checks", checks_},
            {"status", ok_ ? "ok" : "failed"}};
  }

 private:
  std::string command_;
  json params_;
  json audit_ = json::array();
  json checks_ = json::array();
  bool ok_ = true;
};

json betti_json(const PoincarePolynomial& p, std::optional<int> max_degree = std::nullopt) {
  json out = json::array();
  const int top = max_degree ? std::min(*max_degree, p.top_degree()) : p.top_degree();
  for (int d = 0; d <= top; ++d) out.push_back(p[d]);
  return out;
}

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_fraction_string(x));
  return out;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(vector_json(m.row(i)));
  return {{"dim", m.rows()}, {"rows", rows}};
}

json seed_json(std::optional<std::uint64_t> seed) {
  return seed ? json(*seed) : json(nullptr);
}

}  // namespace

json betti(int n, const SurfaceBetti& s, std::optional<int> max_degree) {
  json params = {{"n", n}, {"surface", {s.b0, s.b2, s.b4}}, {"max_degree", max_degree ? json(*max_degree) : json(nullptr)}};
  if (n < 1) throw std::invalid_argument("betti: n must be at least 1");
  if (max_degree && *max_degree < 0) throw std::invalid_argument("betti: max-degree must be non-negative");
  Builder b("betti", params);
  const HilbertPoincare hp = hilbert_poincare(s, n);

  json ledger = json::array();
  for (const auto& c : hp.ledger) {
    ledger.push_back({{"diagram", c.diagram.to_string()},
                      {"codim", c.shift},
                      {"diagonal_betti", betti_json(diagonal_poincare(s, c.diagram))},
                      {"contribution", betti_json(c.contribution, max_degree)}});
  }
  b.step("strata", "H^*(M^[n]) = sum over partitions alpha of H^{*-2 codim(alpha)}(Delta_alpha)",
         {{"partitions", hp.ledger.size()}});
  b.step("diagonals", "Delta_alpha = prod_j M^(n'_j), Poincare series of M^(m) from prod_i (1 - q t^i)^(-b_i)");

  PoincarePolynomial sum;
  for (const auto& c : hp.ledger) sum = sum + c.contribution;
  b.check("ledger sums to total", sum == hp.total);
  b.check("Poincare duality b_i = b_{4n-i}", hp.total.satisfies_duality());
  b.check("odd degrees vanish", hp.total.odd_degrees_vanish());
  b.check("top degree is 4n", hp.total.top_degree() == 4 * n);
  if (n >= 2) {
    const auto h2 = hp.contributions_in_degree(2);
    b.check("H^2 = H^2(M) + C[Delta_n]", hp.total[2] == s.b2 + 1 && h2.size() == 2);
  }

  json result = {{"betti", betti_json(hp.total, max_degree)},
                 {"euler_characteristic", hp.total.euler_characteristic()},
                 {"duality", hp.total.satisfies_duality()},
                 {"top_degree", hp.total.top_degree()},
                 {"ledger", ledger}};
  return b.finish(std::move(result));
}

json certify(int n, const std::optional<Matrix>& gram, std::optional<std::uint64_t> seed) {
  json params = {{"n", n}, {"gram", gram ? "file" : "k3"}, {"seed", seed_json(seed)}};
  Builder b("certify", params);
  const Matrix gram_v = gram ? *gram : k3_lattice_gram();
  const CertificationReport rep = certify_no_trianalytic(n, gram_v);

  json audit = json::array();
  for (const auto& a : rep.audit) {
    audit.push_back({{"diagram", a.diagram.to_string()},
                     {"shapes", a.shapes_total},
                     {"after_pinned_parts_rule", a.after_pinned_parts_rule},
                     {"after_universal_rule", a.after_universal_rule},
                     {"triangular_parts", a.triangular_parts},
                     {"survives", a.survives}});
  }
  b.step("pinned parts", "a special subvariety pins only parts with n_i = 1; pinned parts add no fibre");
  b.step("universal", "trianalytic candidates are universal: A is empty");
  b.step("relative dimension 0", "every part n_i is triangular: n_i = t(t+1)/2", {{"diagrams", audit}});
  b.step("simple, l >= 2", "c(n,l) = 1/(2(l-1)) - (n/l)/(2(n-1)); trianalytic forces c = 0, i.e. n = l");
  b.step("simple, l = 1", "f = B + 2(n-1) d^2 must be su(2)-invariant; fails when proj_W(delta) != 0");
  b.step("product", "mixed parts give a product with dim H^{2,0} > 1; flagged, not certified");

  json candidates = json::array();
  for (const auto& v : rep.candidates) {
    json c = {{"diagram", v.diagram.to_string()}, {"kind", to_string(v.kind)}, {"copies", v.copies},
              {"rule", v.rule}, {"verdict", v.verdict}};
    if (v.kind == CandidateKind::simple) c["obstructed"] = v.obstructed;
    if (v.obstruction) c["obstruction"] = to_fraction_string(*v.obstruction);
    if (v.tensor_coefficient) c["tensor_coefficient"] = to_fraction_string(*v.tensor_coefficient);
    if (v.pullback_tensor_invariant) c["pullback_tensor_invariant"] = *v.pullback_tensor_invariant;
    if (v.weak_criterion) c["weak_criterion"] = *v.weak_criterion;
    if (v.h4) c["h4"] = *v.h4;
    if (v.kind == CandidateKind::product) c["product_flag"] = true;
    candidates.push_back(std::move(c));
  }

  for (const auto& v : rep.candidates)
    if (v.kind == CandidateKind::simple)
      b.check("candidate " + v.diagram.to_string() + " obstructed", v.obstructed);

  json cross = nullptr;
  if (seed) {
    // randomized fixtures only: the verdict above never depends on them
    std::mt19937_64 rng(*seed);
    cross = json::array();
    for (const auto& v : rep.candidates) {
      if (v.kind != CandidateKind::simple) continue;
      const int l = v.copies;
      const H2Lattice L(l == 1 ? n : l, gram_v);
      const PeriodTriple W = random_period_triple(L, rng);
      bool obstructed;
      if (l == 1) {
        obstructed = h4_obstruction(L, W);
      } else {
        const H2Lattice Ln(n, gram_v);
        obstructed = !is_su2_invariant(L, pullback_tensor(Ln, L, bb_tensor(Ln)), W);
      }
      cross.push_back({{"diagram", v.diagram.to_string()}, {"obstructed", obstructed}});
      b.check("random triple agrees for " + v.diagram.to_string(), obstructed == v.obstructed);
    }
  }

  json result = {{"candidates", candidates},
                 {"proper_simple", rep.proper_simple},
                 {"product_flags", rep.product_flags},
                 {"certified", rep.certified},
                 {"verdict", rep.proper_simple == 0 && rep.certified ? "no proper candidates" : rep.conclusion},
                 {"conclusion", rep.conclusion},
                 {"cross_check", cross}};
  return b.finish(std::move(result));
}

json ideals(int N) {
  Builder b("ideals", {{"N", N}});
  const TruncatedRing ring(N);
  const auto action = sl2_action(ring);
  b.check("sl2 brackets [e,f]=h, [h,e]=2e, [h,f]=-2f", action.brackets_hold());
  b.step("graded pieces", "A_l is irreducible iff dim ker(e|A_l) = 1; dims l+1 pairwise distinct");
  b.step("ideal closure", "A_1 * A_l = A_{l+1}, so an invariant ideal containing A_l contains A_{l+1}");

  const auto found = classify_invariant_ideals(N);
  json out = json::array();
  bool all_powers = found.size() == static_cast<std::size_t>(N - 1);
  for (std::size_t k = 0; k < found.size(); ++k) {
    const auto& I = found[k];
    std::vector<Vector> rows;
    for (int l : I.degrees) {
      const auto [offset, size] = ring.graded_piece(l);
      for (std::size_t j = 0; j < size; ++j) {
        Vector v = zero_vector(ring.dim());
        v[offset + j] = 1;
        rows.push_back(std::move(v));
      }
    }
    const bool closed = is_ideal(ring, Matrix::from_rows(rows));
    b.check("m^" + std::to_string(I.power) + " closed under x, y", closed);
    all_powers = all_powers && I.power == static_cast<int>(k) + 1;
    out.push_back({{"ideal", I.power > 0 ? "m^" + std::to_string(I.power) : "other"},
                   {"power", I.power},
                   {"degrees", I.degrees},
                   {"dim", rows.size()}});
  }
  b.check("invariant ideals are exactly m, ..., m^{N-1}", all_powers);
  return b.finish({{"ring_dim", ring.dim()}, {"ideals", out}});
}

json punctual(int i) {
  Builder b("punctual", {{"i", i}});
  b.step("torus", "fixed points are monomial ideals, one per partition of i");
  b.step("sl2", "stable under e = x d/dy and f = y d/dx iff the ideal is m^l, i = l(l+1)/2");
  const auto fixed = punctual_fixed_points(i);
  json out = json::array();
  for (const auto& I : fixed) {
    json gens = json::array();
    for (auto [a, c] : I.generators) gens.push_back({a, c});
    const auto power = I.maximal_ideal_power();
    out.push_back({{"staircase", I.staircase.to_string()},
                   {"generators", gens},
                   {"colength", I.colength()},
                   {"ideal", power ? "m^" + std::to_string(*power) : "other"}});
  }
  const auto root = triangular_root(i);
  b.check("one fixed point iff i is triangular", (fixed.size() == 1) == root.has_value());
  b.check("at most one fixed point", fixed.size() <= 1);
  if (root && fixed.size() == 1) b.check("fixed point is m^l", fixed[0].maximal_ideal_power() == *root);
  return b.finish({{"triangular", root.has_value()}, {"fixed_points", out}});
}

json strata(int n) {
  Builder b("strata", {{"n", n}});
  if (n < 1) throw std::invalid_argument("strata: n must be at least 1");
  b.step("codimension", "codim_C Delta_alpha = 2 sum (n_i - 1)");
  b.step("fibre", "dim pi^{-1}(x) = sum (n_i - 1) over x in Delta_alpha");
  const SemismallReport sr = verify_semismall(n);
  std::vector<SemismallRow> rows = sr.rows;
  std::stable_sort(rows.begin(), rows.end(),
                   [](const SemismallRow& a, const SemismallRow& c) { return a.codimension < c.codimension; });
  json out = json::array();
  json codims = json::array();
  for (const auto& r : rows) {
    out.push_back({{"diagram", r.diagram.to_string()},
                   {"codim", r.codimension},
                   {"fiber_dimension", r.fiber_dimension},
                   {"semismall", r.inequality_holds},
                   {"equality", r.equality_holds},
                   {"triangular_parts", std::all_of(r.diagram.parts().begin(), r.diagram.parts().end(),
                                                    [](int p) { return is_triangular(p); })}});
    codims.push_back(r.codimension);
  }
  b.check("semismall: 2 fibre <= codim", sr.all_pass);
  b.check("equality 2 fibre = codim", sr.all_equal);
  return b.finish({{"partitions", rows.size()}, {"codims", codims}, {"strata", out}});
}

json frobenius(std::optional<std::size_t> dim_v, int n, const std::optional<Matrix>& gram,
               std::optional<std::uint64_t> seed) {
  json params = {{"dimv", dim_v ? json(*dim_v) : json(nullptr)}, {"n", n},
                 {"gram", gram ? "file" : "split"}, {"seed", seed_json(seed)}};
  if (!dim_v && !gram) throw std::invalid_argument("frobenius: give --dimv or --gram");
  if (dim_v && gram && gram->rows() != *dim_v)
    throw std::invalid_argument("frobenius: --dimv does not match the gram file");
  const Matrix G = gram ? *gram : split_form(*dim_v);
  Builder b("frobenius", params);
  b.step("ideal", "I = ideal generated by ker(Delta) in Sym^{n+1}V, Delta = contraction with the form");
  b.step("pattern", "dim A_{2i} = dim S^{min(i,2n-i)} V for 0 <= i <= 2n");

  // dense quotient construction needs Sym^{2n+1} V; beyond desk scale only the generators are checked
  if (sym_dimension(G.rows(), 2 * n + 1) > 5000) {
    const std::size_t harmonic = harmonic_dimension(G, n + 1);
    const std::size_t expected = sym_dimension(G.rows(), n + 1) - sym_dimension(G.rows(), n - 1);
    b.check("dim ker(Delta) in degree n+1 = dim S^{n+1} - dim S^{n-1}", harmonic == expected);
    return b.finish({{"dim_v", G.rows()},
                     {"mode", "generators only"},
                     {"expected", frobenius_dimension_pattern(G.rows(), n)},
                     {"harmonic_generators", harmonic}});
  }

  const std::size_t total = [&] {
    std::size_t t = 0;
    for (auto d : frobenius_dimension_pattern(G.rows(), n)) t += d;
    return t;
  }();
  const bool tables = total <= 200;
  const FrobeniusAlgebra A = FrobeniusAlgebra::build(G, n, tables);

  const auto dims = A.dims();
  const auto expected = frobenius_dimension_pattern(G.rows(), n);
  b.check("dimension pattern", dims == expected);
  b.check("top degree one-dimensional", A.dim(A.top()) == 1);
  const bool nondeg = A.pairing_nondegenerate();
  b.check("counit pairing nondegenerate", nondeg);
  json assoc = "skipped";
  if (tables) {
    const bool a = A.is_associative(), c = A.is_commutative();
    b.check("associative", a);
    b.check("commutative", c);
    assoc = a;
  }

  json nilpotent = nullptr;
  if (seed) {
    std::mt19937_64 rng(*seed);
    nilpotent = json::array();
    if (const auto v0 = find_isotropic_vector(G)) {
      for (int k = 0; k < 5; ++k) {
        const Vector alpha = random_isotropic_vector(G, *v0, rng);
        const bool zero = is_zero(A.power(alpha, n + 1));
        nilpotent.push_back({{"alpha", vector_json(alpha)}, {"power_vanishes", zero}});
        b.check("isotropic alpha^{n+1} = 0", zero);
      }
    }
  }

  return b.finish({{"dim_v", G.rows()},
                   {"mode", "full"},
                   {"dims", dims},
                   {"expected", expected},
                   {"pairing_nondegenerate", nondeg},
                   {"associative", assoc},
                   {"gram", matrix_json(G)},
                   {"isotropic_powers", nilpotent}});
}

json error(const std::string& command, const json& params, const std::string& message) {
  return {{"schema", kSchema}, {"command", command}, {"params", params},
          {"error", message},  {"status", "error"}};
}

bool succeeded(const json& report) { return report.value("status", "") == "ok"; }

Matrix parse_gram(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("rows"))
    throw std::invalid_argument("gram: expected an object with \"dim\" and \"rows\"");
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1)
    throw std::invalid_argument("gram: \"dim\" must be a positive integer");
  const auto d = j["dim"].get<std::size_t>();
  const json& rows = j["rows"];
  if (!rows.is_array() || rows.size() != d) throw std::invalid_argument("gram: expected dim rows");
  Matrix m(d, d);
  for (std::size_t r = 0; r < d; ++r) {
    if (!rows[r].is_array() || rows[r].size() != d)
      throw std::invalid_argument("gram: row " + std::to_string(r) + " must have dim entries");
    for (std::size_t c = 0; c < d; ++c) {
      const json& e = rows[r][c];
      if (e.is_string()) {
        m(r, c) = parse_rational(e.get<std::string>());
      } else if (e.is_number_integer()) {
        m(r, c) = Rational(e.get<long>());
      } else {
        throw std::invalid_argument("gram: entries must be \"p/q\" strings");
      }
    }
  }
  if (!m.is_symmetric()) throw std::invalid_argument("gram: matrix is not symmetric");
  return m;
}

Matrix load_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("gram: cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("gram: malformed JSON: ") + e.what());
  }
  return parse_gram(j);
}

SurfaceBetti parse_surface(const std::string& text) {
  std::vector<std::int64_t> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      values.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("surface: not an integer: '" + item + "'");
    }
  }
  if (values.size() != 3) throw std::invalid_argument("surface: expected b0,b2,b4");
  return SurfaceBetti::make(values[0], values[1], values[2]);
}

Matrix split_form(std::size_t dim) {
  if (dim == 0) throw std::invalid_argument("split_form: dimension must be positive");
  Matrix m(dim, dim);
  for (std::size_t k = 0; k + 1 < dim; k += 2) {
    m(k, k + 1) = 1;
    m(k + 1, k) = 1;
  }
  if (dim % 2 == 1) m(dim - 1, dim - 1) = 1;
  return m;
}

namespace {

bool flat(const json& v) {
  return v.is_primitive() ||
         (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); }));
}

std::string inline_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (!v.is_array()) return v.dump();
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + inline_text(v[k]);
  return s + "]";
}

void render(std::ostringstream& out, const json& v, const std::string& indent) {
  if (v.is_object()) {
    for (auto it = v.begin(); it != v.end(); ++it) {
      if (flat(*it)) {
        out << indent << it.key() << ": " << inline_text(*it) << "\n";
      } else {
        out << indent << it.key() << ":\n";
        render(out, *it, indent + "  ");
      }
    }
  } else if (v.is_array()) {
    for (const auto& x : v) {
      if (flat(x)) {
        out << indent << "- " << inline_text(x) << "\n";
      } else {
        out << indent << "-\n";
        render(out, x, indent + "  ");
      }
    }
  } else {
    out << indent << inline_text(v) << "\n";
  }
}

}  // namespace

std::string render_table(const json& report) {
  std::ostringstream out;
  out << report.value("command", "?") << "  [" << report.value("status", "?") << "]\n";
  if (report.contains("error")) {
    out << "error: " << report["error"].get<std::string>() << "\n";
    return out.str();
  }
  render(out, report["result"], "  ");
  out << "checks:\n";
  for (const auto& c : report["checks"])
    out << "  " << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << "\n";
  return out.str();
}

}  // namespace hilbk3::report
