#include "littlewood/piecewise.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>

#include "littlewood/number_core.hpp"

namespace littlewood {

PiecewisePoly::PiecewisePoly(std::vector<Rational> breakpoints, std::vector<Polynomial> pieces, Rational exterior)
    : breaks_(std::move(breakpoints)), pieces_(std::move(pieces)), exterior_(std::move(exterior)) {
    if (breaks_.size() == 1 && pieces_.empty()) breaks_.clear();
    if (!breaks_.empty() && pieces_.size() + 1 != breaks_.size()) {
        throw std::invalid_argument("PiecewisePoly: need exactly one piece per breakpoint interval");
    }
    if (breaks_.empty() && !pieces_.empty()) throw std::invalid_argument("PiecewisePoly: pieces without breakpoints");
    for (std::size_t i = 1; i < breaks_.size(); ++i) {
        if (!(breaks_[i - 1] < breaks_[i])) {
            throw std::invalid_argument("PiecewisePoly: breakpoints must be strictly increasing");
        }
    }
    canonicalize();
}

PiecewisePoly PiecewisePoly::everywhere(const Rational& c) { return PiecewisePoly({}, {}, c); }

PiecewisePoly PiecewisePoly::window(const Polynomial& p, const Rational& lo, const Rational& hi) {
    return PiecewisePoly({lo, hi}, {p}, 0);
}

void PiecewisePoly::canonicalize() {
    if (pieces_.empty()) {
        breaks_.clear();
        return;
    }
    std::vector<Rational> b{breaks_.front()};
    std::vector<Polynomial> p{pieces_.front()};
    for (std::size_t i = 1; i < pieces_.size(); ++i) {
        if (pieces_[i] == p.back()) {
            continue;
        }
        b.push_back(breaks_[i]);
        p.push_back(pieces_[i]);
    }
    b.push_back(breaks_.back());

    const Polynomial outside = Polynomial::constant(exterior_);
    std::size_t first = 0, last = p.size();
    while (first < last && p[first] == outside) ++first;
    while (last > first && p[last - 1] == outside) --last;

    breaks_.assign(b.begin() + static_cast<long>(first), b.begin() + static_cast<long>(last) + (last > first ? 1 : 0));
    pieces_.assign(p.begin() + static_cast<long>(first), p.begin() + static_cast<long>(last));
    if (pieces_.empty()) breaks_.clear();
}

Polynomial PiecewisePoly::piece_at(const Rational& x) const {
    if (pieces_.empty() || x < breaks_.front() || x >= breaks_.back()) return Polynomial::constant(exterior_);
    auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
    return pieces_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

Rational PiecewisePoly::operator()(const Rational& x) const {
    if (!pieces_.empty() && x == breaks_.back()) return pieces_.back()(x);
    return piece_at(x)(x);
}

PiecewisePoly eulerian_spline(unsigned n) {
    if (n == 0) throw std::invalid_argument("eulerian_spline: n must be >= 1");
    const long nn = static_cast<long>(n);
    std::vector<Rational> breaks;
    std::vector<Polynomial> pieces;
    for (long j = -1; j <= nn; ++j) breaks.emplace_back(j);
    Polynomial acc;
    for (long j = 0; j <= nn; ++j) {
        // Adding one more term of the alternating sum gives the next cell.
        Polynomial term = pow(Polynomial({Rational(1 - j), Rational(1)}), n) * Rational(binomial(nn + 1, j));
        if (j % 2 == 0) {
            acc += term;
        } else {
            acc -= term;
        }
        pieces.push_back(acc);
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces), 0);
}

namespace {

PiecewisePoly combine(const PiecewisePoly& f, const PiecewisePoly& g,
                      const std::function<Polynomial(const Polynomial&, const Polynomial&)>& op) {
    std::vector<Rational> cuts;
    cuts.reserve(f.breakpoints().size() + g.breakpoints().size());
    std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
               std::back_inserter(cuts));
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const Polynomial ext = op(Polynomial::constant(f.exterior()), Polynomial::constant(g.exterior()));
    if (ext.degree() > 0) throw std::logic_error("piecewise operation produced a nonconstant exterior");
    const Rational exterior = ext.coeff(0);

    std::vector<Polynomial> pieces;
    if (cuts.size() >= 2) {
        pieces.reserve(cuts.size() - 1);
        for (std::size_t i = 0; i + 1 < cuts.size(); ++i) pieces.push_back(op(f.piece_at(cuts[i]), g.piece_at(cuts[i])));
    } else {
        cuts.clear();
    }
    return PiecewisePoly(std::move(cuts), std::move(pieces), exterior);
}

}  // namespace

PiecewisePoly pw_add(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (g.is_zero()) return f;
    if (f.is_zero()) return g;
    return combine(f, g, [](const Polynomial& a, const Polynomial& b) { return a + b; });
}

PiecewisePoly pw_mul(const PiecewisePoly& f, const PiecewisePoly& g) {
    if (f.is_zero() || g.is_zero()) return {};
    return combine(f, g, [](const Polynomial& a, const Polynomial& b) { return a * b; });
}

PiecewisePoly pw_scale(const PiecewisePoly& f, const Rational& c) {
    if (c == 0) return {};
    std::vector<Polynomial> pieces = f.pieces();
    for (auto& p : pieces) p *= c;
    return PiecewisePoly(f.breakpoints(), std::move(pieces), f.exterior() * c);
}

PiecewisePoly pw_affine(const PiecewisePoly& f, const Rational& alpha, const Rational& beta) {
    if (alpha == 0) return PiecewisePoly::everywhere(f(beta));
    const auto& b = f.breakpoints();
    const auto& p = f.pieces();
    std::vector<Rational> breaks(b.size());
    std::vector<Polynomial> pieces(p.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t dst = alpha > 0 ? i : b.size() - 1 - i;
        breaks[dst] = (b[i] - beta) / alpha;
    }
    for (std::size_t i = 0; i < p.size(); ++i) {
        const std::size_t dst = alpha > 0 ? i : p.size() - 1 - i;
        pieces[dst] = compose_affine(p[i], alpha, beta);
    }
    return PiecewisePoly(std::move(breaks), std::move(pieces), f.exterior());
}

PiecewisePoly pw_restrict(const PiecewisePoly& f, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) throw std::invalid_argument("pw_restrict: empty interval");
    std::vector<Rational> breaks{lo};
    for (const auto& b : f.breakpoints()) {
        if (lo < b && b < hi) breaks.push_back(b);
    }
    breaks.push_back(hi);
    std::vector<Polynomial> pieces;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) pieces.push_back(f.piece_at(breaks[i]));
    return PiecewisePoly(std::move(breaks), std::move(pieces), 0);
}

namespace {

struct Candidate {
    Interval x;         // location (degenerate when exact)
    Interval value;     // encloses the value at the candidate point
    Rational attained;  // a value f actually takes inside x
    bool exact = false;
    // Needed to refine an inexact critical point.
    Polynomial poly;
    Polynomial dpoly;
    Polynomial roots;  // squarefree polynomial whose single root lies in x
};

Candidate exact_candidate(const Polynomial& p, const Rational& x) {
    Candidate c;
    c.x = {x, x};
    const Rational v = p(x);
    c.value = {v, v};
    c.attained = v;
    c.exact = true;
    return c;
}

void update_enclosure(Candidate& c) {
    const Rational mid = (c.x.lo + c.x.hi) / 2;
    const Rational radius = (c.x.hi - c.x.lo) / 2;
    const Interval slope = enclose(c.dpoly, c.x);
    const Rational bound = std::max(Rational(abs(slope.lo)), Rational(abs(slope.hi)));
    const Rational pm = c.poly(mid);
    c.attained = pm;
    c.value = {pm - radius * bound, pm + radius * bound};
}

// Halves the isolating interval once; becomes exact if the midpoint is the root.
void bisect(Candidate& c) {
    if (c.exact) return;
    const Rational mid = (c.x.lo + c.x.hi) / 2;
    const int sm = sgn(c.roots(mid));
    if (sm == 0) {
        c = exact_candidate(c.poly, mid);
        return;
    }
    if (sm == sgn(c.roots(c.x.lo))) {
        c.x.lo = mid;
    } else {
        c.x.hi = mid;
    }
    update_enclosure(c);
}

Polynomial deflate(const Polynomial& s, const Rational& root) {
    return primitive_part(divmod(s, Polynomial::linear_factor(root)).first);
}

// Collects the roots of squarefree s in the open interval (a, b), where
// s(a) != 0 and s(b) != 0.
void isolate(const Polynomial& s, const Rational& a, const Rational& b, const Rational& eps, const Polynomial& p,
             const Polynomial& dp, std::vector<Candidate>& out) {
    if (s.degree() < 1) return;
    const SturmSequence sturm(s);
    const int count = sturm.count_roots(a, b);
    if (count == 0) return;
    if (count == 1) {
        Candidate c;
        c.x = {a, b};
        c.poly = p;
        c.dpoly = dp;
        c.roots = s;
        update_enclosure(c);
        while (!c.exact && c.x.hi - c.x.lo > eps) bisect(c);
        out.push_back(std::move(c));
        return;
    }
    const Rational mid = (a + b) / 2;
    if (s(mid) == 0) {
        out.push_back(exact_candidate(p, mid));
        const Polynomial rest = deflate(s, mid);
        isolate(rest, a, mid, eps, p, dp, out);
        isolate(rest, mid, b, eps, p, dp, out);
        return;
    }
    isolate(s, a, mid, eps, p, dp, out);
    isolate(s, mid, b, eps, p, dp, out);
}

void add_critical_points(const Polynomial& p, const Rational& a, const Rational& b, const Rational& eps,
                         std::vector<Candidate>& out) {
    const Polynomial dp = derivative(p);
    if (dp.degree() < 1) return;
    Polynomial s = squarefree_part(dp);
    while (s.degree() >= 1 && s(a) == 0) s = deflate(s, a);
    while (s.degree() >= 1 && s(b) == 0) s = deflate(s, b);
    isolate(s, a, b, eps, p, dp, out);
}

}  // namespace

MinimizeResult pw_minimize(const PiecewisePoly& f, const Rational& lo, const Rational& hi, const Rational& eps) {
    if (!(lo < hi)) throw std::invalid_argument("pw_minimize: empty domain [lo, hi]");
    if (!(eps > 0)) throw std::invalid_argument("pw_minimize: eps must be positive");

    std::vector<Rational> cuts{lo};
    for (const auto& b : f.breakpoints()) {
        if (lo < b && b < hi) cuts.push_back(b);
    }
    cuts.push_back(hi);

    std::vector<Candidate> cands;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Rational& a = cuts[i];
        const Rational& b = cuts[i + 1];
        const Polynomial p = f.piece_at(a);
        for (const Rational* x : {&a, &b}) {
            // At a jump the cell's one-sided limit only bounds the infimum.
            Candidate c = exact_candidate(p, *x);
            c.attained = f(*x);
            c.value = {std::min(c.value.lo, c.attained), c.attained};
            cands.push_back(std::move(c));
        }
        add_critical_points(p, a, b, eps, cands);
    }

    // Shared cell endpoints appear twice.
    std::vector<Candidate> unique;
    for (auto& c : cands) {
        auto dup = std::find_if(unique.begin(), unique.end(),
                                [&](const Candidate& u) { return c.exact && u.exact && u.x.lo == c.x.lo; });
        if (dup == unique.end()) {
            unique.push_back(std::move(c));
        } else {
            dup->value.lo = std::min(dup->value.lo, c.value.lo);
        }
    }
    cands = std::move(unique);

    auto best_upper = [&] {
        Rational u = cands.front().attained;
        for (const auto& c : cands) u = std::min(u, c.attained);
        return u;
    };
    auto overlapping = [&](const Rational& upper) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < cands.size(); ++i) {
            if (cands[i].value.lo <= upper) idx.push_back(i);
        }
        return idx;
    };

    Rational upper = best_upper();
    auto contenders = overlapping(upper);
    for (int round = 0; round < 64 && contenders.size() > 1; ++round) {
        bool refined = false;
        for (auto i : contenders) {
            if (!cands[i].exact) {
                bisect(cands[i]);
                refined = true;
            }
        }
        if (!refined) break;
        upper = best_upper();
        contenders = overlapping(upper);
    }

    // Prefer an exact candidate attaining the upper bound, then the best attained value.
    std::size_t chosen = contenders.front();
    for (auto i : contenders) {
        const auto& c = cands[i];
        const auto& cur = cands[chosen];
        if (c.attained < cur.attained || (c.attained == cur.attained && c.exact && !cur.exact)) chosen = i;
    }

    MinimizeResult result;
    result.argmin = cands[chosen].x;
    Rational lower = cands[chosen].value.lo;
    for (auto i : contenders) lower = std::min(lower, cands[i].value.lo);
    result.value = {lower, upper};
    result.alternative = contenders.size() > 1;
    return result;
}

}  // namespace littlewood
