#include "latpack/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <limits>
#include <optional>
#include <unordered_set>

namespace latpack {

namespace {

// Relative slack applied to the floating-point pruning bound so that exact
// solutions on the boundary are never cut off.
constexpr double kSlack = 1.0 + 0x1p-40;

long long to_ll(const Int& v, const char* what) {
    if (v > std::numeric_limits<long long>::max() / 4 ||
        v < std::numeric_limits<long long>::min() / 4)
        throw ResourceError(std::string("integer range exceeded in ") + what);
    return v.convert_to<long long>();
}

// Largest integer <= rat + rad*sqrt2.
Int qsqrt2_floor(const QSqrt2& v) {
    if (v.rad == 0) return floor_int(v.rat);
    Int k(static_cast<long long>(std::floor(v.to_double())));
    while (QSqrt2(Rational(k)) > v) --k;
    while (QSqrt2(Rational(k + 1)) <= v) ++k;
    return k;
}

enum class Mode { Count, Collect, Min };

struct RawLeafKey {
    long long rat, rad;
    bool operator<(const RawLeafKey& o) const {
        return rat != o.rat ? rat < o.rat : rad < o.rad;
    }
    bool operator==(const RawLeafKey& o) const { return rat == o.rat && rad == o.rad; }
};

// Integer model of one field component of the shifted quadratic form:
// S * part(Q(x + t)) = y^T A y + l^T y + c with y = E*x + u.
struct IntForm {
    std::vector<long long> a;   // n*n
    std::vector<long long> l;   // n
    long long c = 0;
    Int scale = 1;              // S
};

class Engine {
public:
    // Lattice-level setup (reduction, Cholesky, field split); call
    // attach_shift before running.  One Engine serves many shifted runs
    // over the same lattice.
    Engine(const Lattice& l, const EnumOptions& opts) : opts_(opts) {
        const SMat& g0 = l.gram();
        n_ = g0.rows();

        LllResult red = lll_reduce_gram(g0);
        gr_ = red.gram;
        ured_ = red.u;
        u64_.resize(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                u64_[i * n_ + j] = to_ll(red.u.at(i, j), "basis reduction transform");

        g1s_.resize(static_cast<std::size_t>(n_) * n_);
        g2s_.resize(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) {
                g1s_[i * n_ + j] = gr_.at(i, j).rat;
                g2s_[i * n_ + j] = gr_.at(i, j).rad;
                gram_rad_ = gram_rad_ || g2s_[i * n_ + j] != 0;
            }

        // Floating-point Cholesky factor G = R^T R.
        std::vector<double> gd(static_cast<std::size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) gd[i * n_ + j] = gr_.at(i, j).to_double();
        rf_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
        for (int j = 0; j < n_; ++j) {
            double diag = gd[j * n_ + j];
            for (int k = 0; k < j; ++k) diag -= rf_[k * n_ + j] * rf_[k * n_ + j];
            if (diag <= 0)
                throw PrecisionError("floating-point Cholesky failed on reduced Gram");
            rf_[j * n_ + j] = std::sqrt(diag);
            for (int i = j + 1; i < n_; ++i) {
                double s = gd[j * n_ + i];
                for (int k = 0; k < j; ++k) s -= rf_[k * n_ + j] * rf_[k * n_ + i];
                rf_[j * n_ + i] = s / rf_[j * n_ + j];
            }
        }

        SMat ginv = inverse(gr_);
        ginv_diag_.assign(n_, 0.0);
        for (int i = 0; i < n_; ++i) ginv_diag_[i] = ginv.at(i, i).to_double();

        dots_rat_.assign(static_cast<std::size_t>(n_ + 1) * n_, 0);
        dots_rad_.assign(static_cast<std::size_t>(n_ + 1) * n_, 0);
        np_rat_.assign(n_ + 1, 0);
        np_rad_.assign(n_ + 1, 0);
        x_.assign(n_, 0);
        zd_.assign(n_, 0.0);
    }

    // Shift-level setup.  Pass nullptr for the homogeneous problem.
    void attach_shift(const std::vector<QSqrt2>* shift) {
        homogeneous_ = shift == nullptr;
        if (shift && static_cast<int>(shift->size()) != n_)
            throw PreconditionError("shift vector length mismatch");

        tred_.assign(n_, QSqrt2(0));
        if (shift) {
            if (!uinv_) uinv_ = inverse(ured_.to_smat());
            for (int j = 0; j < n_; ++j) {
                QSqrt2 s;
                for (int i = 0; i < n_; ++i) s += (*shift)[i] * uinv_->at(i, j);
                tred_[j] = s;
            }
        }

        const std::vector<Rational>& g1 = g1s_;
        const std::vector<Rational>& g2 = g2s_;
        std::vector<Rational> a(n_), b(n_);
        bool shift_rad = false;
        for (int i = 0; i < n_; ++i) {
            a[i] = tred_[i].rat;
            b[i] = tred_[i].rad;
            shift_rad = shift_rad || b[i] != 0;
        }
        has_rad_ = gram_rad_ || shift_rad;

        Int e = 1;
        for (int i = 0; i < n_; ++i) e = boost::multiprecision::lcm(e, den(a[i]));
        e_ = to_ll(e, "shift denominator");
        uvec_.assign(n_, 0);
        for (int i = 0; i < n_; ++i)
            uvec_[i] = to_ll(num(a[i]) * (e / den(a[i])), "scaled shift");

        // With p = x + a:
        //   Q(x + t) = [p G1 p + 4 p.G2 b + 2 b G1 b]
        //            + [p G2 p + 2 p.G1 b + 2 b G2 b] * sqrt2
        auto matvec = [&](const std::vector<Rational>& m, const std::vector<Rational>& v) {
            std::vector<Rational> r(n_);
            for (int i = 0; i < n_; ++i) {
                Rational s;
                for (int j = 0; j < n_; ++j) s += m[i * n_ + j] * v[j];
                r[i] = s;
            }
            return r;
        };
        auto dotvec = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
            Rational s;
            for (int i = 0; i < n_; ++i) s += x[i] * y[i];
            return s;
        };
        std::vector<Rational> g1b = matvec(g1, b), g2b = matvec(g2, b);

        auto build = [&](const std::vector<Rational>& quad, const std::vector<Rational>& linv,
                         const Rational& cst) {
            IntForm f;
            Int s = 1;
            Int esq = e * e;
            for (const auto& q : quad) s = boost::multiprecision::lcm(s, den(q) * esq);
            for (int i = 0; i < n_; ++i) s = boost::multiprecision::lcm(s, den(linv[i]) * e);
            s = boost::multiprecision::lcm(s, den(cst));
            f.scale = s;
            f.a.resize(quad.size());
            for (std::size_t i = 0; i < quad.size(); ++i) {
                Rational v = quad[i] * s / esq;
                if (den(v) != 1) throw PreconditionError("internal scaling error");
                f.a[i] = to_ll(num(v), "scaled Gram");
            }
            f.l.resize(n_);
            for (int i = 0; i < n_; ++i) {
                Rational v = linv[i] * s / e;
                if (den(v) != 1) throw PreconditionError("internal scaling error");
                f.l[i] = to_ll(num(v), "scaled shift form");
            }
            Rational cv = cst * s;
            if (den(cv) != 1) throw PreconditionError("internal scaling error");
            f.c = to_ll(num(cv), "scaled shift form");
            return f;
        };

        std::vector<Rational> lin_rat(n_), lin_rad(n_);
        for (int i = 0; i < n_; ++i) {
            lin_rat[i] = 4 * g2b[i];
            lin_rad[i] = 2 * g1b[i];
        }
        form_rat_ = build(g1, lin_rat, 2 * dotvec(b, g1b));
        if (has_rad_) form_rad_ = build(g2, lin_rad, 2 * dotvec(b, g2b));

        td_.assign(n_, 0.0);
        for (int i = 0; i < n_; ++i) td_[i] = tred_[i].to_double();

        np_rat_[n_] = form_rat_.c;
        np_rad_[n_] = has_rad_ ? form_rad_.c : 0;
        attached_ = true;
    }

    void check_ranges(double bound_d) const {
        double maxy_sum = 0, maxm = 1, maxl = 0, maxc = 0;
        for (int i = 0; i < n_; ++i) {
            double mx = std::sqrt(std::max(bound_d, 0.0) * ginv_diag_[i]) + std::abs(td_[i]) + 2;
            maxy_sum += static_cast<double>(e_) * mx;
        }
        auto scan = [&](const IntForm& f) {
            for (long long v : f.a) maxm = std::max(maxm, std::abs(static_cast<double>(v)));
            for (long long v : f.l) maxl = std::max(maxl, std::abs(static_cast<double>(v)));
            maxc = std::max(maxc, std::abs(static_cast<double>(f.c)));
        };
        scan(form_rat_);
        if (has_rad_) scan(form_rad_);
        double top = maxy_sum * maxy_sum * maxm + maxy_sum * maxl * n_ + maxc;
        if (top > 0x1p62)
            throw ResourceError("exact accumulator range exceeded; input scale too large");
    }

    // Runs one counting or collecting enumeration.  bound is inclusive
    // unless strict.
    void run(Mode mode, QSqrt2 bound, bool strict) {
        reset(mode, strict);
        bound_ = bound;
        if (bound_.sign() < 0) return;
        launch();
    }

    // Finds the minimal attained norm and its multiplicity.  A cap limits
    // the search to norms <= cap; when nothing qualifies, capped_minimum
    // reports that instead of a value.
    void run_min(const QSqrt2* cap) {
        reset(Mode::Min, false);
        // Seed with an attained value: a basis vector (homogeneous) or the
        // rounded shift (coset).
        if (homogeneous_) {
            bound_ = gr_.at(0, 0);
            for (int i = 1; i < n_; ++i) bound_ = std::min(bound_, gr_.at(i, i));
        } else {
            std::vector<QSqrt2> probe(n_);
            for (int i = 0; i < n_; ++i) {
                long long r = static_cast<long long>(std::floor(-td_[i] + 0.5));
                probe[i] = QSqrt2(Rational(r)) + tred_[i];
            }
            bound_ = quadratic_value(gr_, probe);
        }
        if (cap && *cap < bound_) bound_ = *cap;
        if (bound_.sign() < 0) return;
        launch();
    }

    std::map<QSqrt2, std::uint64_t> norm_map() const {
        std::map<QSqrt2, std::uint64_t> out;
        for (const auto& [k, c] : counts_) out[to_norm(k)] += c;
        for (const auto& [k, c] : counts_vec_) out[to_norm(k)] += c;
        return out;
    }

    std::vector<ShortVector> vectors() const {
        std::vector<ShortVector> out;
        out.reserve(found_.size());
        for (const auto& [coords, key] : found_) out.push_back({coords, to_norm(key)});
        std::sort(out.begin(), out.end(), [](const ShortVector& a, const ShortVector& b) {
            return a.coords < b.coords;
        });
        return out;
    }

    CosetMinimum minimum() const {
        if (!have_best_) throw PreconditionError("empty enumeration has no minimum");
        return {to_norm(best_), best_count_};
    }

    std::optional<CosetMinimum> capped_minimum() const {
        if (!have_best_) return std::nullopt;
        return CosetMinimum{to_norm(best_), best_count_};
    }

private:
    void reset(Mode mode, bool strict) {
        if (!attached_) throw PreconditionError("no shift attached to enumeration engine");
        mode_ = mode;
        strict_ = strict;
        counts_.clear();
        counts_vec_.clear();
        found_.clear();
        best_count_ = 0;
        have_best_ = false;
    }

    void launch() {
        double bound_d = bound_.to_double();
        check_ranges(bound_d);
        set_exact_bound();
        bound_f_ = bound_d * kSlack + 1e-12;
        descend(n_ - 1, bound_f_, true);
    }

    QSqrt2 to_norm(const RawLeafKey& k) const {
        return {Rational(k.rat) / Rational(form_rat_.scale),
                has_rad_ ? Rational(k.rad) / Rational(form_rad_.scale) : Rational(0)};
    }

    void set_exact_bound() {
        if (!has_rad_) {
            QSqrt2 scaled = bound_ * QSqrt2(Rational(form_rat_.scale));
            Int b = strict_ ? -qsqrt2_floor(-scaled) - 1 : qsqrt2_floor(scaled);
            b64_ = to_ll(b, "scaled norm bound");
            b64_valid_ = true;
        } else {
            b64_valid_ = false;
        }
    }

    bool accept(long long nprat, long long nprad) const {
        if (b64_valid_) return nprat <= b64_;
        QSqrt2 v = to_norm({nprat, nprad});
        return strict_ ? v < bound_ : v <= bound_;
    }

    void descend(int k, double rem, bool allzero) {
        if (k < 0) {
            leaf(allzero);
            return;
        }
        double w = 0;
        const double* rrow = rf_.data() + static_cast<std::size_t>(k) * n_;
        for (int j = k + 1; j < n_; ++j) w += rrow[j] * zd_[j];
        double rkk = rrow[k];
        double s = std::sqrt(std::max(rem, 0.0));
        long long xlo = static_cast<long long>(std::ceil((-s - w) / rkk - td_[k]));
        long long xhi = static_cast<long long>(std::floor((s - w) / rkk - td_[k]));
        if (homogeneous_ && allzero) xlo = std::max(xlo, 0LL);

        const long long* mr = form_rat_.a.data() + static_cast<std::size_t>(k) * n_;
        const long long* pr = dots_rat_.data() + static_cast<std::size_t>(k + 1) * n_;
        long long* cr = dots_rat_.data() + static_cast<std::size_t>(k) * n_;
        const long long lr = form_rat_.l[k];
        const long long* md = nullptr;
        const long long* pd = nullptr;
        long long* cd = nullptr;
        long long ld = 0;
        if (has_rad_) {
            md = form_rad_.a.data() + static_cast<std::size_t>(k) * n_;
            pd = dots_rad_.data() + static_cast<std::size_t>(k + 1) * n_;
            cd = dots_rad_.data() + static_cast<std::size_t>(k) * n_;
            ld = form_rad_.l[k];
        }

        for (long long x = xlo; x <= xhi; ++x) {
            if (++nodes_ > opts_.node_budget)
                throw ResourceError("enumeration node budget exceeded");
            double z = static_cast<double>(x) + td_[k];
            double q = rkk * z + w;
            double term = q * q;
            if (term > rem) continue;
            long long y = e_ * x + uvec_[k];
            np_rat_[k] = np_rat_[k + 1] + y * y * mr[k] + 2 * y * pr[k] + lr * y;
            for (int j = 0; j < k; ++j) cr[j] = pr[j] + y * mr[j];
            if (has_rad_) {
                np_rad_[k] = np_rad_[k + 1] + y * y * md[k] + 2 * y * pd[k] + ld * y;
                for (int j = 0; j < k; ++j) cd[j] = pd[j] + y * md[j];
            }
            x_[k] = x;
            zd_[k] = z;
            descend(k - 1, rem - term, allzero && x == 0);
        }
    }

    void leaf(bool allzero) {
        if (homogeneous_ && allzero) return;  // origin
        long long nprat = np_rat_[0];
        long long nprad = has_rad_ ? np_rad_[0] : 0;
        std::uint64_t weight = homogeneous_ ? 2 : 1;

        if (mode_ == Mode::Min) {
            if (!accept(nprat, nprad)) return;
            RawLeafKey key{nprat, nprad};
            if (!have_best_) {
                best_ = key;
                best_count_ = weight;
                have_best_ = true;
            } else if (key == best_) {
                best_count_ += weight;
            } else if (!has_rad_ ? key.rat < best_.rat
                                 : to_norm(key) < to_norm(best_)) {
                best_ = key;
                best_count_ = weight;
                // Tighten the exact cut; the float bound stays at its
                // initial value, which is only a pruning matter.
                bound_ = to_norm(key);
                set_exact_bound();
            }
            return;
        }

        if (!accept(nprat, nprad)) return;
        RawLeafKey key{nprat, nprad};
        if (mode_ == Mode::Count) {
            // Distinct norms are few; a move-to-front linear scan beats a
            // tree map on hundreds of millions of leaves.
            for (std::size_t i = 0; i < counts_vec_.size(); ++i) {
                if (counts_vec_[i].first == key) {
                    counts_vec_[i].second += weight;
                    if (i > 0) std::swap(counts_vec_[i], counts_vec_[i - 1]);
                    return;
                }
            }
            if (counts_vec_.size() < 512) {
                counts_vec_.emplace_back(key, weight);
            } else {
                counts_[key] += weight;
            }
            return;
        }
        // Collect
        std::vector<long long> coords(n_, 0);
        for (int k = 0; k < n_; ++k) {
            if (x_[k] == 0) continue;
            const long long* urow = u64_.data() + static_cast<std::size_t>(k) * n_;
            for (int j = 0; j < n_; ++j) coords[j] += x_[k] * urow[j];
        }
        std::uint64_t entry_bytes = static_cast<std::uint64_t>(n_) * 8 + 64;
        if ((found_.size() + 2) * entry_bytes > opts_.memory_budget_bytes)
            throw ResourceError("enumeration memory budget exceeded");
        if (homogeneous_) {
            std::vector<long long> neg(n_);
            for (int j = 0; j < n_; ++j) neg[j] = -coords[j];
            found_.emplace_back(std::move(neg), key);
        }
        found_.emplace_back(std::move(coords), key);
    }

    EnumOptions opts_;
    int n_ = 0;
    SMat gr_;
    IMat ured_;
    std::optional<SMat> uinv_;
    std::vector<long long> u64_;
    std::vector<Rational> g1s_, g2s_;
    bool gram_rad_ = false;
    std::vector<double> rf_, ginv_diag_;

    bool attached_ = false;
    bool homogeneous_ = true;
    std::vector<QSqrt2> tred_;
    bool has_rad_ = false;
    long long e_ = 1;
    std::vector<long long> uvec_;
    IntForm form_rat_, form_rad_;
    std::vector<double> td_;

    Mode mode_ = Mode::Count;
    bool strict_ = false;
    QSqrt2 bound_;
    double bound_f_ = 0;
    long long b64_ = 0;
    bool b64_valid_ = false;
    std::uint64_t nodes_ = 0;

    std::vector<long long> dots_rat_, dots_rad_;
    std::vector<long long> np_rat_, np_rad_;
    std::vector<long long> x_;
    std::vector<double> zd_;

    std::map<RawLeafKey, std::uint64_t> counts_;
    std::vector<std::pair<RawLeafKey, std::uint64_t>> counts_vec_;
    std::vector<std::pair<std::vector<long long>, RawLeafKey>> found_;
    RawLeafKey best_{0, 0};
    std::uint64_t best_count_ = 0;
    bool have_best_ = false;
};

} // namespace

std::vector<QSqrt2> to_scalar_vector(const std::vector<Rational>& v) {
    return std::vector<QSqrt2>(v.begin(), v.end());
}

std::vector<ShortVector> short_vectors(const Lattice& l, const QSqrt2& bound,
                                       const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(nullptr);
    e.run(Mode::Collect, bound, false);
    return e.vectors();
}

std::map<QSqrt2, std::uint64_t> norm_counts(const Lattice& l, const QSqrt2& bound,
                                            const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(nullptr);
    e.run(Mode::Count, bound, false);
    return e.norm_map();
}

std::vector<ShortVector> coset_vectors(const Lattice& l, const std::vector<QSqrt2>& shift,
                                       const QSqrt2& bound, const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(&shift);
    e.run(Mode::Collect, bound, false);
    return e.vectors();
}

std::map<QSqrt2, std::uint64_t> coset_norm_counts(const Lattice& l,
                                                  const std::vector<QSqrt2>& shift,
                                                  const QSqrt2& bound,
                                                  const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(&shift);
    e.run(Mode::Count, bound, false);
    return e.norm_map();
}

CosetMinimum coset_minimum(const Lattice& l, const std::vector<QSqrt2>& shift,
                           const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(&shift);
    e.run_min(nullptr);
    return e.minimum();
}

JointCosetMinimum joint_coset_minimum(const Lattice& l,
                                      const std::vector<std::vector<QSqrt2>>& shifts,
                                      const QSqrt2& cap, const EnumOptions& opts) {
    JointCosetMinimum out{cap, std::vector<std::uint64_t>(shifts.size(), 0)};
    if (shifts.empty()) return out;
    Engine e(l, opts);
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        e.attach_shift(&shifts[i]);
        e.run_min(&out.norm);
        auto m = e.capped_minimum();
        if (!m) continue;
        if (m->norm < out.norm) {
            out.norm = m->norm;
            std::fill(out.counts.begin(), out.counts.end(), 0);
        }
        if (m->norm == out.norm) out.counts[i] = m->count;
    }
    return out;
}

QSqrt2 min_norm(const Lattice& l, const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(nullptr);
    e.run_min(nullptr);
    return e.minimum().norm;
}

std::uint64_t kissing_number(const Lattice& l, const EnumOptions& opts) {
    Engine e(l, opts);
    e.attach_shift(nullptr);
    e.run_min(nullptr);
    return e.minimum().count;
}

std::vector<ShortVector> minimal_vectors(const Lattice& l, const EnumOptions& opts) {
    return short_vectors(l, min_norm(l, opts), opts);
}

QSeries theta_series(const Lattice& l, const Rational& cutoff, const EnumOptions& opts) {
    if (!l.gram().is_rational())
        throw PreconditionError("theta series requires a rational Gram matrix");
    if (cutoff <= 0) throw PreconditionError("theta cutoff must be positive");
    Engine e(l, opts);
    e.attach_shift(nullptr);
    e.run(Mode::Count, QSqrt2(cutoff), true);
    QSeries s;
    s.set_cutoff(cutoff);
    s.add_term(0, 1);
    for (const auto& [nrm, cnt] : e.norm_map())
        s.add_term(nrm.rat, Rational(cnt));
    return s;
}

std::vector<std::uint64_t> coordination_sequence(const Lattice& l, int steps,
                                                 const EnumOptions& opts) {
    if (steps < 0) throw PreconditionError("steps must be nonnegative");
    std::vector<ShortVector> steps_set = minimal_vectors(l, opts);
    int n = l.dim();

    auto key_of = [n](const std::vector<long long>& p) {
        std::string k(static_cast<std::size_t>(n) * sizeof(long long), '\0');
        std::memcpy(k.data(), p.data(), k.size());
        return k;
    };

    std::unordered_set<std::string> visited;
    std::vector<std::vector<long long>> frontier;
    std::vector<std::uint64_t> out;
    std::vector<long long> origin(n, 0);
    visited.insert(key_of(origin));
    frontier.push_back(origin);
    out.push_back(1);

    std::uint64_t entry_bytes = static_cast<std::uint64_t>(n) * 8 + 96;
    for (int s = 1; s <= steps; ++s) {
        std::vector<std::vector<long long>> next;
        for (const auto& p : frontier) {
            for (const auto& mv : steps_set) {
                std::vector<long long> q(n);
                for (int j = 0; j < n; ++j) q[j] = p[j] + mv.coords[j];
                if (visited.insert(key_of(q)).second) {
                    next.push_back(std::move(q));
                    if (visited.size() * entry_bytes > opts.memory_budget_bytes)
                        throw ResourceError("coordination sequence memory budget exceeded");
                }
            }
        }
        out.push_back(next.size());
        frontier = std::move(next);
    }
    return out;
}

double unit_ball_volume(int n) {
    return std::pow(M_PI, n / 2.0) / std::tgamma(n / 2.0 + 1.0);
}

namespace {

QSqrt2 qsqrt2_pow(QSqrt2 base, int e) {
    QSqrt2 acc(1);
    while (e > 0) {
        if (e & 1) acc *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return acc;
}

} // namespace

DensityInfo density_info(const Lattice& l, const EnumOptions& opts) {
    DensityInfo d;
    d.min_norm_sq = min_norm(l, opts);
    QSqrt2 detv = l.determinant();
    d.center_density_sq = qsqrt2_pow(d.min_norm_sq * QSqrt2(Rational(1, 4)), l.dim()) * detv.inverse();
    d.center_density = std::sqrt(d.center_density_sq.to_double());
    d.density = d.center_density * unit_ball_volume(l.dim());
    return d;
}

} // namespace latpack
