#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "liepois/errors.hpp"
#include "liepois/lie_algebra.hpp"

namespace liepois {

// A truncated element of g^{⊗k} ⊗ S(g): finitely many terms
//   coeff · e_{s1}⊗…⊗e_{sk} · λ^m,
// where the exponent vector m encodes a monomial in the basis-dual coordinates
// of g* (equivalently a polynomial function of λ). Everything of polynomial
// degree > N is dropped; products truncate, never extend. Slots may also index
// the dual basis (for g*-valued series); the callers that pair or act on such
// slots pick the matching routines (ad vs ad*). Terms are kept in a canonical
// sparse map: all stored coefficients nonzero, ordered by degree, then
// exponent vector, then slot tuple.
class TensorSeries {
public:
    struct Key {
        std::vector<uint8_t> slots;
        std::vector<uint8_t> expo;

        unsigned degree() const {
            unsigned d = 0;
            for (auto e : expo) d += e;
            return d;
        }
        friend bool operator<(const Key& a, const Key& b) {
            unsigned da = a.degree(), db = b.degree();
            if (da != db) return da < db;
            if (a.expo != b.expo) return a.expo < b.expo;
            return a.slots < b.slots;
        }
        friend bool operator==(const Key& a, const Key& b) {
            return a.slots == b.slots && a.expo == b.expo;
        }
    };
    using TermMap = std::map<Key, Rational>;

    TensorSeries(unsigned dim, unsigned rank, int truncation)
        : dim_(dim), rank_(rank), trunc_(truncation) {}

    unsigned dim() const { return dim_; }
    unsigned rank() const { return rank_; }
    int truncation() const { return trunc_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<uint8_t>& slots, const std::vector<uint8_t>& expo,
                  const Rational& c) {
        if (c.is_zero()) return;
        Key k{slots, expo};
        if (static_cast<int>(k.degree()) > trunc_) return;
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(std::move(k), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static TensorSeries zero_like(const TensorSeries& t) {
        return TensorSeries(t.dim_, t.rank_, t.trunc_);
    }

    TensorSeries with_truncation(int n) const {
        TensorSeries out(dim_, rank_, n);
        for (const auto& [k, c] : terms_)
            if (static_cast<int>(k.degree()) <= n) out.terms_.emplace(k, c);
        return out;
    }

    TensorSeries pure_degree_part(unsigned d) const {
        TensorSeries out(dim_, rank_, trunc_);
        for (const auto& [k, c] : terms_)
            if (k.degree() == d) out.terms_.emplace(k, c);
        return out;
    }
    // components of degree <= d
    TensorSeries up_to_degree(unsigned d) const {
        TensorSeries out(dim_, rank_, trunc_);
        for (const auto& [k, c] : terms_)
            if (k.degree() <= d) out.terms_.emplace(k, c);
        return out;
    }
    int min_degree() const {  // -1 for the zero series
        int d = -1;
        for (const auto& [k, c] : terms_) {
            int kd = static_cast<int>(k.degree());
            if (d < 0 || kd < d) d = kd;
        }
        return d;
    }
    bool has_constant_term() const {
        for (const auto& [k, c] : terms_)
            if (k.degree() == 0) return true;
        return false;
    }
    size_t term_count() const { return terms_.size(); }

    friend TensorSeries operator+(const TensorSeries& a, const TensorSeries& b) {
        require_compatible(a, b);
        TensorSeries out(a.dim_, a.rank_, std::min(a.trunc_, b.trunc_));
        for (const auto& [k, c] : a.terms_) out.add_term(k.slots, k.expo, c);
        for (const auto& [k, c] : b.terms_) out.add_term(k.slots, k.expo, c);
        return out;
    }
    friend TensorSeries operator-(const TensorSeries& a, const TensorSeries& b) {
        require_compatible(a, b);
        TensorSeries out(a.dim_, a.rank_, std::min(a.trunc_, b.trunc_));
        for (const auto& [k, c] : a.terms_) out.add_term(k.slots, k.expo, c);
        for (const auto& [k, c] : b.terms_) out.add_term(k.slots, k.expo, -c);
        return out;
    }
    TensorSeries operator-() const { return scaled(Rational(-1)); }
    TensorSeries scaled(const Rational& f) const {
        TensorSeries out(dim_, rank_, trunc_);
        if (f.is_zero()) return out;
        for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * f);
        return out;
    }
    TensorSeries& operator+=(const TensorSeries& o) { return *this = *this + o; }
    TensorSeries& operator-=(const TensorSeries& o) { return *this = *this - o; }

    // equality of content (rank/dim must agree; truncations may differ)
    friend bool operator==(const TensorSeries& a, const TensorSeries& b) {
        return a.dim_ == b.dim_ && a.rank_ == b.rank_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorSeries& a, const TensorSeries& b) {
        return !(a == b);
    }

    // canonical text: one line per term, `slots * monomial : p/q`
    std::string to_string(const std::vector<std::string>& labels) const {
        std::string out;
        for (const auto& [k, c] : terms_) {
            std::string s;
            if (k.slots.empty()) {
                s = "1";
            } else {
                for (size_t i = 0; i < k.slots.size(); ++i) {
                    if (i) s += "⊗";
                    s += labels[k.slots[i]];
                }
            }
            s += " * ";
            std::string mono;
            for (unsigned v = 0; v < dim_; ++v) {
                if (k.expo[v] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += labels[v];
                if (k.expo[v] > 1) mono += "^" + std::to_string(k.expo[v]);
            }
            s += mono.empty() ? "1" : mono;
            s += " : " + c.to_string();
            out += s + "\n";
        }
        return out;
    }

    // --- constructors for common shapes ---

    static TensorSeries constant_tensor1(const LieAlgebra& g, const Vec& x, int N) {
        TensorSeries out(g.dim(), 1, N);
        std::vector<uint8_t> e(g.dim(), 0);
        for (unsigned i = 0; i < g.dim(); ++i)
            if (!x[i].is_zero()) out.add_term({static_cast<uint8_t>(i)}, e, x[i]);
        return out;
    }
    static TensorSeries constant_tensor2(const LieAlgebra& g, const Matrix& m, int N) {
        TensorSeries out(g.dim(), 2, N);
        std::vector<uint8_t> e(g.dim(), 0);
        for (unsigned i = 0; i < g.dim(); ++i)
            for (unsigned j = 0; j < g.dim(); ++j)
                if (!m[i][j].is_zero())
                    out.add_term({static_cast<uint8_t>(i), static_cast<uint8_t>(j)}, e,
                                 m[i][j]);
        return out;
    }
    // coordinate function λ_v as a k=0 series
    static TensorSeries coordinate(unsigned dim, unsigned v, int N) {
        TensorSeries out(dim, 0, N);
        std::vector<uint8_t> e(dim, 0);
        e[v] = 1;
        out.add_term({}, e, Rational(1));
        return out;
    }

    // --- slot bookkeeping (the single permutation chokepoint) ---

    // perm[i] = target position of factor i
    TensorSeries permute_slots(const std::vector<unsigned>& perm) const {
        TensorSeries out(dim_, rank_, trunc_);
        for (const auto& [k, c] : terms_) {
            std::vector<uint8_t> slots(k.slots.size());
            for (size_t i = 0; i < k.slots.size(); ++i) slots[perm[i]] = k.slots[i];
            out.add_term(slots, k.expo, c);
        }
        return out;
    }
    TensorSeries swap_slots12() const { return permute_slots({1, 0}); }

    // cyclic shift by one: factor i -> position i+1 mod rank
    TensorSeries cyclic_shift() const {
        std::vector<unsigned> perm(rank_);
        for (unsigned i = 0; i < rank_; ++i) perm[i] = (i + 1) % rank_;
        return permute_slots(perm);
    }

private:
    unsigned dim_, rank_;
    int trunc_;
    TermMap terms_;

    static void require_compatible(const TensorSeries& a, const TensorSeries& b) {
        if (a.dim_ != b.dim_ || a.rank_ != b.rank_)
            throw InputError("TensorSeries: rank/dim mismatch");
    }

    friend class SeriesOps;
};

// All the calculus on TensorSeries that needs the Lie algebra. Pure functions;
// a SeriesOps is just a handle on the algebra's structure constants.
class SeriesOps {
public:
    explicit SeriesOps(const LieAlgebra& g) : g_(&g) {}

    const LieAlgebra& algebra() const { return *g_; }

    TensorSeries zero(unsigned rank, int N) const {
        return TensorSeries(g_->dim(), rank, N);
    }

    // product of k=0 series (polynomial multiplication, truncating)
    TensorSeries mul(const TensorSeries& a, const TensorSeries& b) const {
        if (a.rank() != 0 || b.rank() != 0)
            throw InputError("mul: expected scalar (k=0) series");
        TensorSeries out(a.dim(), 0, std::min(a.truncation(), b.truncation()));
        mul_into(out, a, b);
        return out;
    }

    // multiply any series by a k=0 series
    TensorSeries scale_by_function(const TensorSeries& a, const TensorSeries& f) const {
        if (f.rank() != 0) throw InputError("scale_by_function: f must be k=0");
        TensorSeries out(a.dim(), a.rank(), std::min(a.truncation(), f.truncation()));
        const unsigned cap = static_cast<unsigned>(out.truncation());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kf, cf] : f.terms()) {
                if (ka.degree() + kf.degree() > cap) continue;
                out.add_term(ka.slots, add_expo(ka.expo, kf.expo), ca * cf);
            }
        return out;
    }

    // pointwise Lie bracket of two rank-1 series
    TensorSeries bracket1(const TensorSeries& a, const TensorSeries& b) const {
        if (a.rank() != 1 || b.rank() != 1) throw InputError("bracket1: rank must be 1");
        TensorSeries out(a.dim(), 1, std::min(a.truncation(), b.truncation()));
        const unsigned cap = static_cast<unsigned>(out.truncation());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                if (ka.degree() + kb.degree() > cap) continue;
                Vec br = g_->bracket_basis(ka.slots[0], kb.slots[0]);
                auto expo = add_expo(ka.expo, kb.expo);
                for (unsigned m = 0; m < g_->dim(); ++m)
                    if (!br[m].is_zero())
                        out.add_term({static_cast<uint8_t>(m)}, expo, ca * cb * br[m]);
            }
        return out;
    }

    // [a placed via map_a, b placed via map_b] in g^{⊗out_rank}: the two
    // placements meet in exactly one shared slot, where the legs get bracketed;
    // every other output slot is covered by exactly one input leg.
    TensorSeries bracket_placed(const TensorSeries& a, const std::vector<unsigned>& map_a,
                                const TensorSeries& b, const std::vector<unsigned>& map_b,
                                unsigned out_rank) const {
        unsigned shared = find_shared(map_a, map_b, out_rank);
        unsigned ia = index_of(map_a, shared);
        unsigned ib = index_of(map_b, shared);
        TensorSeries out(a.dim(), out_rank, std::min(a.truncation(), b.truncation()));
        const unsigned cap = static_cast<unsigned>(out.truncation());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                if (ka.degree() + kb.degree() > cap) continue;
                auto expo = add_expo(ka.expo, kb.expo);
                Vec br = g_->bracket_basis(ka.slots[ia], kb.slots[ib]);
                std::vector<uint8_t> slots(out_rank, 0);
                for (size_t s = 0; s < map_a.size(); ++s)
                    if (s != ia) slots[map_a[s]] = ka.slots[s];
                for (size_t s = 0; s < map_b.size(); ++s)
                    if (s != ib) slots[map_b[s]] = kb.slots[s];
                for (unsigned m = 0; m < g_->dim(); ++m)
                    if (!br[m].is_zero()) {
                        slots[shared] = static_cast<uint8_t>(m);
                        out.add_term(slots, expo, ca * cb * br[m]);
                    }
            }
        return out;
    }

    // d: appends the derivative slot last; for f of pure degree d the output
    // has pure degree d-1 (exact partial derivatives, no truncation loss)
    TensorSeries differential(const TensorSeries& f) const {
        TensorSeries out(f.dim(), f.rank() + 1, f.truncation());
        for (const auto& [k, c] : f.terms())
            for (unsigned v = 0; v < f.dim(); ++v) {
                if (k.expo[v] == 0) continue;
                auto slots = k.slots;
                slots.push_back(static_cast<uint8_t>(v));
                auto expo = k.expo;
                --expo[v];
                out.add_term(slots, expo, c * Rational(k.expo[v]));
            }
        return out;
    }

    // Alt: sum of the cyclic slot shifts, each weighted by the sign of the
    // shift ((-1)^{n-1} per single step). For odd rank this is the plain
    // cyclic sum; for rank 2 it is x - x^{2,1}, which is what both the
    // Hamiltonian condition Alt(d α)=0 and the corrector α=Alt(dβ) need.
    TensorSeries alternate(const TensorSeries& x) const {
        if (x.rank() < 1) throw InputError("alternate: rank must be >= 1");
        TensorSeries out = x;
        TensorSeries shifted = x;
        Rational step_sign = (x.rank() % 2 == 0) ? Rational(-1) : Rational(1);
        Rational sign(1);
        for (unsigned c = 1; c < x.rank(); ++c) {
            shifted = shifted.cyclic_shift();
            sign *= step_sign;
            out += shifted.scaled(sign);
        }
        return out;
    }

    // ⟨… λ in slot s …⟩: the g leg in slot s becomes the degree-1 coordinate
    // factor; polynomial degree rises by one, overflow beyond N is dropped
    TensorSeries contract_lambda(const TensorSeries& x, unsigned slot) const {
        if (slot >= x.rank()) throw InputError("contract_lambda: slot out of range");
        TensorSeries out(x.dim(), x.rank() - 1, x.truncation());
        for (const auto& [k, c] : x.terms()) {
            auto slots = k.slots;
            unsigned v = slots[slot];
            slots.erase(slots.begin() + slot);
            auto expo = k.expo;
            ++expo[v];
            out.add_term(slots, expo, c);
        }
        return out;
    }

    // Σ_m ψ_m (ad X)^m applied to one slot of target. X must have zero
    // constant term so that ad X raises degree and the sum terminates.
    TensorSeries apply_analytic(const std::vector<Rational>& psi, const TensorSeries& X,
                                const TensorSeries& target, unsigned slot) const {
        if (X.rank() != 1) throw InputError("apply_analytic: X must be rank 1");
        if (X.has_constant_term())
            throw PoleAtZero("apply_analytic: X has a constant term");
        TensorSeries out = target.scaled(psi.empty() ? Rational(0) : psi[0]);
        TensorSeries power = target;
        int N = std::min(X.truncation(), target.truncation());
        for (int m = 1; m < static_cast<int>(psi.size()) && m <= N; ++m) {
            power = ad_once(X, power, slot);
            if (power.is_zero()) break;
            if (!psi[m].is_zero()) out += power.scaled(psi[m]);
        }
        return out;
    }

    // single application of ad X to one slot
    TensorSeries ad_once(const TensorSeries& X, const TensorSeries& target,
                         unsigned slot) const {
        if (X.rank() != 1) throw InputError("ad_once: X must be rank 1");
        TensorSeries out(target.dim(), target.rank(),
                         std::min(X.truncation(), target.truncation()));
        const unsigned cap = static_cast<unsigned>(out.truncation());
        for (const auto& [kx, cx] : X.terms())
            for (const auto& [kt, ct] : target.terms()) {
                if (kx.degree() + kt.degree() > cap) continue;
                Vec br = g_->bracket_basis(kx.slots[0], kt.slots[slot]);
                auto expo = add_expo(kx.expo, kt.expo);
                auto slots = kt.slots;
                for (unsigned m = 0; m < g_->dim(); ++m)
                    if (!br[m].is_zero()) {
                        slots[slot] = static_cast<uint8_t>(m);
                        out.add_term(slots, expo, cx * ct * br[m]);
                    }
            }
        return out;
    }

    // coadjoint version for g*-valued slots: ad*(e_i)(ε^a) = -Σ_b c^a_{ib} ε^b
    TensorSeries ad_star_once(const TensorSeries& X, const TensorSeries& target,
                              unsigned slot) const {
        if (X.rank() != 1) throw InputError("ad_star_once: X must be rank 1");
        TensorSeries out(target.dim(), target.rank(),
                         std::min(X.truncation(), target.truncation()));
        const unsigned cap = static_cast<unsigned>(out.truncation());
        for (const auto& [kx, cx] : X.terms())
            for (const auto& [kt, ct] : target.terms()) {
                if (kx.degree() + kt.degree() > cap) continue;
                unsigned a = kt.slots[slot];
                auto expo = add_expo(kx.expo, kt.expo);
                auto slots = kt.slots;
                for (unsigned b = 0; b < g_->dim(); ++b) {
                    Vec br = g_->bracket_basis(kx.slots[0], b);
                    if (br[a].is_zero()) continue;
                    slots[slot] = static_cast<uint8_t>(b);
                    out.add_term(slots, expo, -(cx * ct * br[a]));
                }
            }
        return out;
    }
    TensorSeries apply_analytic_star(const std::vector<Rational>& psi,
                                     const TensorSeries& X, const TensorSeries& target,
                                     unsigned slot) const {
        if (X.has_constant_term())
            throw PoleAtZero("apply_analytic_star: X has a constant term");
        TensorSeries out = target.scaled(psi.empty() ? Rational(0) : psi[0]);
        TensorSeries power = target;
        int N = std::min(X.truncation(), target.truncation());
        for (int m = 1; m < static_cast<int>(psi.size()) && m <= N; ++m) {
            power = ad_star_once(X, power, slot);
            if (power.is_zero()) break;
            if (!psi[m].is_zero()) out += power.scaled(psi[m]);
        }
        return out;
    }

    // total adjoint action of a basis element: ad on every tensor slot plus
    // the derivation action on the S(g) part. Kills invariant elements.
    TensorSeries act_adjoint_basis(unsigned a, const TensorSeries& T) const {
        TensorSeries out(T.dim(), T.rank(), T.truncation());
        for (const auto& [k, c] : T.terms()) {
            for (unsigned s = 0; s < T.rank(); ++s) {
                Vec br = g_->bracket_basis(a, k.slots[s]);
                auto slots = k.slots;
                for (unsigned m = 0; m < g_->dim(); ++m)
                    if (!br[m].is_zero()) {
                        slots[s] = static_cast<uint8_t>(m);
                        out.add_term(slots, k.expo, c * br[m]);
                    }
            }
            for (unsigned v = 0; v < T.dim(); ++v) {
                if (k.expo[v] == 0) continue;
                Vec br = g_->bracket_basis(a, v);
                for (unsigned m = 0; m < g_->dim(); ++m) {
                    if (br[m].is_zero()) continue;
                    auto expo = k.expo;
                    --expo[v];
                    ++expo[m];
                    out.add_term(k.slots, expo, c * br[m] * Rational(k.expo[v]));
                }
            }
        }
        return out;
    }
    bool is_invariant(const TensorSeries& T) const {
        for (unsigned a = 0; a < g_->dim(); ++a)
            if (!act_adjoint_basis(a, T).is_zero()) return false;
        return true;
    }

    // transform one slot by a linear map given as index -> coordinate vector
    TensorSeries transform_slot(const TensorSeries& T, unsigned slot,
                                const std::function<Vec(unsigned)>& F) const {
        TensorSeries out(T.dim(), T.rank(), T.truncation());
        for (const auto& [k, c] : T.terms()) {
            Vec img = F(k.slots[slot]);
            auto slots = k.slots;
            for (unsigned m = 0; m < g_->dim(); ++m)
                if (!img[m].is_zero()) {
                    slots[slot] = static_cast<uint8_t>(m);
                    out.add_term(slots, k.expo, c * img[m]);
                }
        }
        return out;
    }

    // ⟨u ⊗ v, K⟩ for rank-1 u, v and a constant kernel K (k=0 result)
    TensorSeries pair_with_kernel(const TensorSeries& u, const TensorSeries& v,
                                  const Matrix& K) const {
        TensorSeries out(u.dim(), 0, std::min(u.truncation(), v.truncation()));
        for (const auto& [ku, cu] : u.terms())
            for (const auto& [kv, cv] : v.terms()) {
                const Rational& k = K[ku.slots[0]][kv.slots[0]];
                if (!k.is_zero()) out.add_term({}, add_expo(ku.expo, kv.expo), cu * cv * k);
            }
        return out;
    }

    // ⟨u ⊗ v, T⟩ against a rank-2 series T: pair u into slot 1 and v into
    // slot 2 by plain index contraction, multiplying polynomial parts
    TensorSeries pair_into_series(const TensorSeries& u, const TensorSeries& v,
                                  const TensorSeries& T) const {
        if (T.rank() != 2) throw InputError("pair_into_series: T must be rank 2");
        TensorSeries out(u.dim(), 0,
                         std::min({u.truncation(), v.truncation(), T.truncation()}));
        for (const auto& [kt, ct] : T.terms())
            for (const auto& [ku, cu] : u.terms()) {
                if (ku.slots[0] != kt.slots[0]) continue;
                for (const auto& [kv, cv] : v.terms()) {
                    if (kv.slots[0] != kt.slots[1]) continue;
                    out.add_term({}, add_expo(add_expo(ku.expo, kv.expo), kt.expo),
                                 ct * cu * cv);
                }
            }
        return out;
    }

    // composition with a change of variables: every coordinate λ_v gets
    // replaced by comps[v] (k=0 series, zero constant term). Slots untouched.
    TensorSeries compose(const TensorSeries& f,
                         const std::vector<TensorSeries>& comps) const {
        if (comps.size() != f.dim()) throw InputError("compose: component count");
        int N = f.truncation();
        for (const auto& c : comps) {
            if (c.has_constant_term())
                throw InputError("compose: substitution has a constant term");
            N = std::min(N, c.truncation());
        }
        // powers of each component, computed on demand
        std::vector<std::vector<TensorSeries>> pw(f.dim());
        for (unsigned v = 0; v < f.dim(); ++v)
            pw[v].push_back(one_scalar(f.dim(), N));  // power 0
        auto power = [&](unsigned v, unsigned e) -> const TensorSeries& {
            while (pw[v].size() <= e) pw[v].push_back(mul(pw[v].back(), comps[v]));
            return pw[v][e];
        };
        TensorSeries out(f.dim(), f.rank(), N);
        for (const auto& [k, c] : f.terms()) {
            TensorSeries acc = one_scalar(f.dim(), N);
            for (unsigned v = 0; v < f.dim(); ++v)
                if (k.expo[v] > 0) acc = mul(acc, power(v, k.expo[v]));
            for (const auto& [km, cm] : acc.terms())
                out.add_term(k.slots, km.expo, c * cm);
        }
        return out;
    }

    TensorSeries one_scalar(unsigned dim, int N) const {
        TensorSeries out(dim, 0, N);
        out.add_term({}, std::vector<uint8_t>(dim, 0), Rational(1));
        return out;
    }

    // add a new first slot holding a fixed basis element
    TensorSeries prepend_constant_slot(const TensorSeries& T, unsigned index) const {
        TensorSeries out(T.dim(), T.rank() + 1, T.truncation());
        for (const auto& [k, c] : T.terms()) {
            auto slots = k.slots;
            slots.insert(slots.begin(), static_cast<uint8_t>(index));
            out.add_term(slots, k.expo, c);
        }
        return out;
    }

    // the sub-series with a fixed basis index in one slot, that slot removed
    TensorSeries slot_component(const TensorSeries& T, unsigned slot,
                                unsigned index) const {
        TensorSeries out(T.dim(), T.rank() - 1, T.truncation());
        for (const auto& [k, c] : T.terms()) {
            if (k.slots[slot] != index) continue;
            auto slots = k.slots;
            slots.erase(slots.begin() + slot);
            out.add_term(slots, k.expo, c);
        }
        return out;
    }

    // the tautological rank-1 series λ∨-style helpers live with the
    // quasitriangular ops; here only the identity coordinate tuple
    std::vector<TensorSeries> identity_components(int N) const {
        std::vector<TensorSeries> out;
        for (unsigned v = 0; v < g_->dim(); ++v)
            out.push_back(TensorSeries::coordinate(g_->dim(), v, N));
        return out;
    }

    static std::vector<uint8_t> add_expo(const std::vector<uint8_t>& a,
                                         const std::vector<uint8_t>& b) {
        std::vector<uint8_t> out(a.size());
        for (size_t i = 0; i < a.size(); ++i)
            out[i] = static_cast<uint8_t>(a[i] + b[i]);
        return out;
    }

private:
    const LieAlgebra* g_;

    static void mul_into(TensorSeries& out, const TensorSeries& a, const TensorSeries& b) {
        const unsigned cap = static_cast<unsigned>(out.truncation());
        for (const auto& [ka, ca] : a.terms())
            for (const auto& [kb, cb] : b.terms()) {
                if (ka.degree() + kb.degree() > cap) continue;
                out.add_term({}, add_expo(ka.expo, kb.expo), ca * cb);
            }
    }

    static unsigned find_shared(const std::vector<unsigned>& a,
                                const std::vector<unsigned>& b, unsigned out_rank) {
        std::vector<int> hits(out_rank, 0);
        for (auto s : a) ++hits[s];
        for (auto s : b) ++hits[s];
        int shared = -1;
        for (unsigned i = 0; i < out_rank; ++i) {
            if (hits[i] == 2) {
                if (shared >= 0) throw InputError("bracket_placed: two shared slots");
                shared = static_cast<int>(i);
            } else if (hits[i] != 1) {
                throw InputError("bracket_placed: slot not covered exactly once");
            }
        }
        if (shared < 0) throw InputError("bracket_placed: no shared slot");
        return static_cast<unsigned>(shared);
    }
    static unsigned index_of(const std::vector<unsigned>& v, unsigned x) {
        for (unsigned i = 0; i < v.size(); ++i)
            if (v[i] == x) return i;
        throw InputError("bracket_placed: bad placement");
    }
};

}  // namespace liepois
