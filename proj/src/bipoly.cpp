#include "wzb/bipoly.hpp"

#include <sstream>

namespace wzb {

const char* var_name(Var v) { return v == Var::n ? "n" : "k"; }

BiPoly::BiPoly(const Rat& c) {
  if (c != 0) terms_[{0, 0}] = c;
}

BiPoly BiPoly::variable(Var v) {
  BiPoly p;
  p.terms_[{v == Var::n ? 1 : 0, v == Var::k ? 1 : 0}] = Rat(1);
  return p;
}

BiPoly BiPoly::monomial(const Rat& c, int dn, int dk) {
  BiPoly p;
  if (c != 0) p.terms_[{dn, dk}] = c;
  return p;
}

BiPoly BiPoly::affine(const Rat& c0, const Rat& cn, const Rat& ck) {
  BiPoly p(c0);
  if (cn != 0) p.terms_[{1, 0}] = cn;
  if (ck != 0) p.terms_[{0, 1}] = ck;
  return p;
}

bool BiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Mono{0, 0});
}

bool BiPoly::depends_on(Var v) const {
  for (const auto& [m, c] : terms_)
    if ((v == Var::n ? m.dn : m.dk) > 0) return true;
  return false;
}

int BiPoly::degree(Var v) const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, v == Var::n ? m.dn : m.dk);
  return d;
}

Rat BiPoly::coeff(int dn, int dk) const {
  auto it = terms_.find({dn, dk});
  return it == terms_.end() ? Rat(0) : it->second;
}

Mono BiPoly::leading_mono() const { return terms_.rbegin()->first; }
Rat BiPoly::leading_coeff() const { return terms_.empty() ? Rat(0) : terms_.rbegin()->second; }

void BiPoly::add_term(const Mono& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& o) {
  BiPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) r.add_term({ma.dn + mb.dn, ma.dk + mb.dk}, ca * cb);
  *this = std::move(r);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, cc] : terms_) cc *= c;
  return *this;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r(Rat(1));
  BiPoly b = *this;
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rat BiPoly::eval(const Rat& vn, const Rat& vk) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) acc += c * rat_pow(vn, m.dn) * rat_pow(vk, m.dk);
  return acc;
}

BiPoly BiPoly::eval_partial(Var v, const Rat& value) const {
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    int dv = v == Var::n ? m.dn : m.dk;
    Mono rest = v == Var::n ? Mono{0, m.dk} : Mono{m.dn, 0};
    r.add_term(rest, c * rat_pow(value, dv));
  }
  return r;
}

BiPoly BiPoly::subst_shift(Var v, const Rat& delta) const {
  if (delta == 0) return *this;
  BiPoly r;
  for (const auto& [m, c] : terms_) {
    int dv = v == Var::n ? m.dn : m.dk;
    int dother = v == Var::n ? m.dk : m.dn;
    // (v + delta)^dv by binomial expansion
    Rat binom(1);
    Rat dpow(1);
    for (int j = dv; j >= 0; --j) {
      Mono mm = v == Var::n ? Mono{j, dother} : Mono{dother, j};
      r.add_term(mm, c * binom * dpow);
      if (j > 0) {
        binom *= Rat(j);
        binom /= Rat(dv - j + 1);
        dpow *= delta;
      }
    }
  }
  return r;
}

BiPoly BiPoly::subst_negate() const {
  BiPoly r;
  for (const auto& [m, c] : terms_)
    r.add_term(m, (m.total() % 2 == 0) ? c : -c);
  return r;
}

std::optional<BiPoly> BiPoly::try_div(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  BiPoly q, r = a;
  const Mono lb = b.leading_mono();
  const Rat lcb = b.leading_coeff();
  while (!r.is_zero()) {
    Mono lr = r.leading_mono();
    if (lr.dn < lb.dn || lr.dk < lb.dk) return std::nullopt;
    Mono d{lr.dn - lb.dn, lr.dk - lb.dk};
    Rat c = r.leading_coeff() / lcb;
    BiPoly piece = monomial(c, d.dn, d.dk);
    q += piece;
    r -= piece * b;
  }
  return q;
}

namespace {

// ---- univariate helpers (coefficient vectors, ascending degree) ----

using UPoly = std::vector<Rat>;

void utrim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly to_uni(const BiPoly& p, Var v) {
  UPoly u(static_cast<size_t>(std::max(0, p.degree(v) + 1)));
  for (const auto& [m, c] : p.terms()) u[static_cast<size_t>(v == Var::n ? m.dn : m.dk)] = c;
  return u;
}

BiPoly from_uni(const UPoly& u, Var v) {
  BiPoly p;
  for (size_t i = 0; i < u.size(); ++i)
    p += BiPoly::monomial(u[i], v == Var::n ? static_cast<int>(i) : 0,
                          v == Var::k ? static_cast<int>(i) : 0);
  return p;
}

UPoly uni_rem(UPoly a, const UPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rat f = a.back() / b.back();
    size_t off = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
    utrim(a);
  }
  return a;
}

UPoly uni_gcd(UPoly a, UPoly b) {
  utrim(a);
  utrim(b);
  while (!b.empty()) {
    UPoly r = uni_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rat lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

// ---- poly-in-k with coefficients in Q[n] ----

using KPoly = std::vector<BiPoly>;  // index = degree in k

void ktrim(KPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

KPoly k_coeffs(const BiPoly& p) {
  KPoly c(static_cast<size_t>(std::max(0, p.degree(Var::k) + 1)));
  for (const auto& [m, co] : p.terms()) c[static_cast<size_t>(m.dk)] += BiPoly::monomial(co, m.dn, 0);
  return c;
}

BiPoly from_k_coeffs(const KPoly& c) {
  BiPoly p;
  for (size_t i = 0; i < c.size(); ++i) {
    BiPoly ki = BiPoly::variable(Var::k).pow(static_cast<unsigned>(i));
    p += c[i] * ki;
  }
  return p;
}

// gcd of univariate-in-n polynomials
BiPoly n_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.is_constant() || b.is_constant()) return BiPoly(1);
  return from_uni(uni_gcd(to_uni(a, Var::n), to_uni(b, Var::n)), Var::n);
}

BiPoly content_k(const KPoly& c) {
  BiPoly g;
  for (const auto& p : c) g = n_gcd(g, p);
  return g;
}

KPoly k_primitive(const KPoly& p) {
  BiPoly cont = content_k(p);
  if (cont.is_zero() || cont.is_constant()) {
    KPoly q = p;
    ktrim(q);
    return q;
  }
  KPoly q;
  q.reserve(p.size());
  for (const auto& co : p) q.push_back(co.is_zero() ? BiPoly() : *BiPoly::try_div(co, cont));
  ktrim(q);
  return q;
}

// pseudo-remainder of A by B in the variable k
KPoly k_prem(KPoly a, const KPoly& b) {
  ktrim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const BiPoly& lcb = b.back();
    BiPoly lca = a.back();
    size_t off = a.size() - b.size();
    KPoly next(a.size() - 1);
    for (size_t i = 0; i + 1 < a.size(); ++i) {
      next[i] = a[i] * lcb;
      if (i >= off) next[i] -= lca * b[i - off];
    }
    a = std::move(next);
    ktrim(a);
  }
  return a;
}

}  // namespace

BiPoly BiPoly::gcd(const BiPoly& a, const BiPoly& b) {
  auto monic = [](BiPoly p) {
    if (!p.is_zero()) {
      Rat inv = 1 / p.leading_coeff();
      p *= inv;
    }
    return p;
  };
  if (a.is_zero()) return monic(b);
  if (b.is_zero()) return monic(a);
  if (a.is_constant() || b.is_constant()) return BiPoly(1);
  if (!a.depends_on(Var::k) && !b.depends_on(Var::k)) return monic(n_gcd(a, b));
  if (!a.depends_on(Var::n) && !b.depends_on(Var::n)) {
    UPoly g = uni_gcd(to_uni(a, Var::k), to_uni(b, Var::k));
    return monic(from_uni(g, Var::k));
  }

  // Main variable k over Q[n]: split content, then a primitive PRS.
  KPoly ca = k_coeffs(a), cb = k_coeffs(b);
  BiPoly cont_a = content_k(ca), cont_b = content_k(cb);
  BiPoly cg = n_gcd(cont_a, cont_b);
  KPoly ap = k_primitive(ca), bp = k_primitive(cb);
  if (ap.size() < bp.size()) std::swap(ap, bp);
  KPoly g;
  while (true) {
    if (bp.empty()) {
      g = ap;
      break;
    }
    if (bp.size() == 1) {
      g = {BiPoly(1)};  // coprime in k
      break;
    }
    KPoly r = k_prem(ap, bp);
    ap = std::move(bp);
    bp = k_primitive(r);
  }
  return monic(from_k_coeffs(k_primitive(g)) * cg);
}

std::string BiPoly::str(const char* vn, const char* vk) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // print highest terms first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rat ac = c < 0 ? Rat(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    bool has_var = m.dn > 0 || m.dk > 0;
    if (!has_var || ac != 1) {
      os << rat_str(ac);
      if (has_var) os << "*";
    }
    if (m.dn > 0) {
      os << vn;
      if (m.dn > 1) os << "^" << m.dn;
      if (m.dk > 0) os << "*";
    }
    if (m.dk > 0) {
      os << vk;
      if (m.dk > 1) os << "^" << m.dk;
    }
  }
  return os.str();
}

}  // namespace wzb
