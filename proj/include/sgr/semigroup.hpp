#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "sgr/errors.hpp"

namespace sgr {

using Deg = long long;
using Vec = std::vector<long long>;

inline Vec vec_add(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline Vec vec_sub(const Vec& a, const Vec& b) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Vec vec_scale(Deg c, const Vec& a) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
    return r;
}

inline bool vec_nonneg(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Deg x) { return x >= 0; });
}

inline bool vec_zero(const Vec& a) {
    return std::all_of(a.begin(), a.end(), [](Deg x) { return x == 0; });
}

// Degree arithmetic shared by numerical (Deg) and affine (Vec) semigroups.
inline Deg deg_add(Deg a, Deg b) { return a + b; }
inline Deg deg_sub(Deg a, Deg b) { return a - b; }
inline Deg deg_neg(Deg a) { return -a; }
inline Vec deg_add(const Vec& a, const Vec& b) { return vec_add(a, b); }
inline Vec deg_sub(const Vec& a, const Vec& b) { return vec_sub(a, b); }
inline Vec deg_neg(const Vec& a) { return vec_scale(-1, a); }

/// Gap data of a content-1 numerical semigroup.
struct GapData {
    std::vector<Deg> gaps;            // sorted ascending
    Deg frobenius = -1;               // -1 when the semigroup is all of N
    Deg genus = 0;
    std::vector<Deg> pseudo_frobenius;
};

enum class SymmetryClass { symmetric, pseudo_symmetric, neither };

inline const char* to_string(SymmetryClass c) {
    switch (c) {
        case SymmetryClass::symmetric: return "symmetric";
        case SymmetryClass::pseudo_symmetric: return "pseudo-symmetric";
        default: return "neither";
    }
}

namespace detail {

// Dynamic-programming reachability for non-negative combinations of gens.
// Table grows on demand; gens need not have gcd 1.
class ReachTable {
public:
    explicit ReachTable(std::vector<Deg> gens) : gens_(std::move(gens)) {}

    bool reachable(Deg x) {
        if (x < 0) return false;
        std::lock_guard<std::mutex> lock(mu_);
        ensure(x);
        return table_[static_cast<std::size_t>(x)];
    }

    // Frobenius number of the semigroup (requires gcd of gens == 1).
    // Found once a run of min-generator consecutive members appears.
    Deg frobenius() {
        std::lock_guard<std::mutex> lock(mu_);
        if (frobenius_known_) return frobenius_;
        const Deg step = gens_.front();
        Deg run = 0;
        Deg last_gap = -1;
        for (Deg x = 0;; ++x) {
            ensure(x);
            if (table_[static_cast<std::size_t>(x)]) {
                if (++run >= step) break;
            } else {
                run = 0;
                last_gap = x;
            }
        }
        frobenius_ = last_gap;
        frobenius_known_ = true;
        return frobenius_;
    }

private:
    void ensure(Deg x) {
        auto need = static_cast<std::size_t>(x) + 1;
        if (table_.size() >= need) return;
        std::size_t grow = std::max(need, table_.size() * 2 + 64);
        std::size_t old = table_.size();
        table_.resize(grow, 0);
        if (old == 0) {
            table_[0] = 1;
            old = 1;
        }
        for (std::size_t i = old; i < table_.size(); ++i) {
            for (Deg g : gens_) {
                if (static_cast<Deg>(i) >= g && table_[i - static_cast<std::size_t>(g)]) {
                    table_[i] = 1;
                    break;
                }
            }
        }
    }

    std::vector<Deg> gens_;  // sorted ascending
    std::mutex mu_;
    std::vector<char> table_;
    bool frobenius_known_ = false;
    Deg frobenius_ = -1;
};

inline bool representable(Deg x, const std::vector<Deg>& gens) {
    if (x < 0) return false;
    if (x == 0) return true;
    if (gens.empty()) return false;
    std::vector<char> table(static_cast<std::size_t>(x) + 1, 0);
    table[0] = 1;
    for (Deg i = 1; i <= x; ++i)
        for (Deg g : gens)
            if (i >= g && table[static_cast<std::size_t>(i - g)]) {
                table[static_cast<std::size_t>(i)] = 1;
                break;
            }
    return table[static_cast<std::size_t>(x)];
}

}  // namespace detail

/// Numerical semigroup given by its minimal generators, together with the
/// content g = gcd of the generators. Membership, gaps and the Frobenius
/// number are computed on the reduced (content-1) semigroup.
class NumericalSemigroup {
public:
    using degree_type = Deg;

    explicit NumericalSemigroup(std::vector<Deg> gens, bool strict_minimal = false) {
        if (gens.empty()) throw EmptyInput();
        for (Deg g : gens)
            if (g <= 0) throw NonPositiveGenerator();
        std::sort(gens.begin(), gens.end());
        std::vector<Deg> input = gens;
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        presentation_ = gens;  // deduplicated but possibly non-minimal
        // Drop redundant generators, largest first.
        for (std::size_t i = gens.size(); i-- > 0;) {
            std::vector<Deg> rest;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            if (!rest.empty() && detail::representable(gens[i], rest))
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        }
        if (strict_minimal && gens != input) throw NotMinimal();
        gens_ = std::move(gens);
        content_ = 0;
        for (Deg g : gens_) content_ = std::gcd(content_, g);
        reduced_gens_.reserve(gens_.size());
        for (Deg g : gens_) reduced_gens_.push_back(g / content_);
        reach_ = std::make_shared<detail::ReachTable>(reduced_gens_);
    }

    const std::vector<Deg>& generators() const { return gens_; }

    /// The deduplicated input list, kept even when non-minimal: resolutions
    /// (and hence Betti degrees) are taken over one variable per entry.
    const std::vector<Deg>& presentation() const { return presentation_; }

    Deg content() const { return content_; }
    std::size_t embedding_dim() const { return gens_.size(); }

    NumericalSemigroup reduced() const {
        return content_ == 1 ? *this : NumericalSemigroup(reduced_gens_);
    }

    NumericalSemigroup scaled(Deg c) const {
        std::vector<Deg> g;
        g.reserve(presentation_.size());
        for (Deg x : presentation_) g.push_back(c * x);
        return NumericalSemigroup(std::move(g));
    }

    bool contains(Deg x) const {
        if (x < 0) return false;
        if (x % content_ != 0) return false;
        return reach_->reachable(x / content_);
    }

    bool is_generator(Deg x) const {
        return std::binary_search(gens_.begin(), gens_.end(), x);
    }

    /// Frobenius number of the reduced semigroup (content must be 1).
    Deg frobenius() const {
        if (content_ != 1) throw ContentNotOne();
        return reach_->frobenius();
    }

    GapData gap_data() const {
        if (content_ != 1) throw ContentNotOne();
        GapData gd;
        gd.frobenius = frobenius();
        for (Deg x = 1; x <= gd.frobenius; ++x)
            if (!contains(x)) gd.gaps.push_back(x);
        gd.genus = static_cast<Deg>(gd.gaps.size());
        for (Deg x : gd.gaps) {
            bool pf = true;
            for (Deg g : gens_)
                if (!contains(x + g)) {
                    pf = false;
                    break;
                }
            if (pf) gd.pseudo_frobenius.push_back(x);
        }
        return gd;
    }

    SymmetryClass symmetry_class() const {
        if (content_ != 1) throw ContentNotOne();
        const Deg f = frobenius();
        bool symmetric = true;
        for (Deg x = 0; x <= f; ++x)
            if (contains(x) == contains(f - x)) {
                symmetric = false;
                break;
            }
        if (symmetric) return SymmetryClass::symmetric;
        if (f >= 0 && f % 2 == 0) {
            bool pseudo = true;
            for (Deg x = 0; x <= f; ++x) {
                if (x == f / 2) continue;
                if (!contains(x) && !contains(f - x)) {
                    pseudo = false;
                    break;
                }
            }
            if (pseudo) return SymmetryClass::pseudo_symmetric;
        }
        return SymmetryClass::neither;
    }

    /// All u in N^n with sum u_i * m_i == x, in lexicographic order.
    std::vector<std::vector<Deg>> factorizations(Deg x) const {
        std::vector<std::vector<Deg>> out;
        if (x < 0) return out;
        std::vector<Deg> u(gens_.size(), 0);
        enumerate(x, 0, u, out);
        return out;
    }

    /// Lexicographically smallest factorization, if any.
    std::optional<std::vector<Deg>> factorize_one(Deg x) const {
        if (!contains(x)) return std::nullopt;
        std::vector<Deg> u(gens_.size(), 0);
        if (first_factorization(x, 0, u)) return u;
        return std::nullopt;
    }

    bool operator==(const NumericalSemigroup& o) const { return gens_ == o.gens_; }

private:
    void enumerate(Deg rem, std::size_t i, std::vector<Deg>& u,
                   std::vector<std::vector<Deg>>& out) const {
        if (i + 1 == gens_.size()) {
            if (rem % gens_[i] == 0) {
                u[i] = rem / gens_[i];
                out.push_back(u);
                u[i] = 0;
            }
            return;
        }
        for (Deg k = 0; k * gens_[i] <= rem; ++k) {
            u[i] = k;
            enumerate(rem - k * gens_[i], i + 1, u, out);
        }
        u[i] = 0;
    }

    bool first_factorization(Deg rem, std::size_t i, std::vector<Deg>& u) const {
        if (i + 1 == gens_.size()) {
            if (rem % gens_[i] == 0) {
                u[i] = rem / gens_[i];
                return true;
            }
            return false;
        }
        for (Deg k = 0; k * gens_[i] <= rem; ++k) {
            u[i] = k;
            if (first_factorization(rem - k * gens_[i], i + 1, u)) return true;
        }
        u[i] = 0;
        return false;
    }

    std::vector<Deg> gens_;
    std::vector<Deg> presentation_;
    Deg content_ = 1;
    std::vector<Deg> reduced_gens_;
    std::shared_ptr<detail::ReachTable> reach_;
};

inline NumericalSemigroup make_numerical(std::vector<Deg> gens, bool strict_minimal = false) {
    return NumericalSemigroup(std::move(gens), strict_minimal);
}

/// Affine semigroup in N^r with memoized membership by descent: z is a member
/// iff z == 0 or z - m_i stays in N^r and is a member for some generator m_i.
class AffineSemigroup {
public:
    using degree_type = Vec;

    explicit AffineSemigroup(std::vector<Vec> gens, bool strict_minimal = false) {
        if (gens.empty()) throw EmptyInput();
        dim_ = gens.front().size();
        for (const Vec& g : gens) {
            if (g.size() != dim_) throw DimensionMismatch();
            if (!vec_nonneg(g) || vec_zero(g)) throw NonPositiveGenerator();
        }
        std::sort(gens.begin(), gens.end());
        std::vector<Vec> input = gens;
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        for (std::size_t i = gens.size(); i-- > 0;) {
            std::vector<Vec> rest;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != i) rest.push_back(gens[j]);
            if (!rest.empty() && in_span(gens[i], rest))
                gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(i));
        }
        if (strict_minimal && gens != input) throw NotMinimal();
        gens_ = std::move(gens);
        memo_ = std::make_shared<Memo>();
    }

    std::size_t ambient_dim() const { return dim_; }
    const std::vector<Vec>& generators() const { return gens_; }
    const std::vector<Vec>& presentation() const { return gens_; }
    std::size_t embedding_dim() const { return gens_.size(); }

    bool is_generator(const Vec& z) const {
        return std::binary_search(gens_.begin(), gens_.end(), z);
    }

    bool contains(const Vec& z) const {
        if (z.size() != dim_) throw DimensionMismatch();
        if (!vec_nonneg(z)) return false;
        std::lock_guard<std::mutex> lock(memo_->mu);
        return member(z);
    }

    /// One factorization of z over the generators, if a member.
    std::optional<std::vector<Deg>> factorize_one(const Vec& z) const {
        if (!contains(z)) return std::nullopt;
        std::vector<Deg> u(gens_.size(), 0);
        Vec cur = z;
        while (!vec_zero(cur)) {
            bool moved = false;
            for (std::size_t i = 0; i < gens_.size(); ++i) {
                Vec next = vec_sub(cur, gens_[i]);
                if (vec_nonneg(next) && contains(next)) {
                    ++u[i];
                    cur = std::move(next);
                    moved = true;
                    break;
                }
            }
            if (!moved) return std::nullopt;  // unreachable for members
        }
        return u;
    }

    bool operator==(const AffineSemigroup& o) const { return gens_ == o.gens_; }

private:
    struct Memo {
        std::mutex mu;
        std::map<Vec, bool> known;
    };

    bool member(const Vec& z) const {
        if (vec_zero(z)) return true;
        auto it = memo_->known.find(z);
        if (it != memo_->known.end()) return it->second;
        bool in = false;
        for (const Vec& g : gens_) {
            Vec next = vec_sub(z, g);
            if (vec_nonneg(next) && member(next)) {
                in = true;
                break;
            }
        }
        memo_->known.emplace(z, in);
        return in;
    }

    static bool in_span(const Vec& z, const std::vector<Vec>& gens) {
        AffineSemigroup tmp(gens);
        return tmp.contains(z);
    }

    std::size_t dim_ = 0;
    std::vector<Vec> gens_;
    std::shared_ptr<Memo> memo_;
};

// ---------------------------------------------------------------------------
// Text syntax: "31,37,41" for numerical, "2,0;0,2;1,1" for affine.

inline std::vector<Deg> parse_generator_list(const std::string& text) {
    std::vector<Deg> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(std::stoll(item));
    }
    if (out.empty()) throw EmptyInput();
    return out;
}

inline std::vector<Vec> parse_affine_generator_list(const std::string& text) {
    std::vector<Vec> out;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ';')) {
        if (part.empty()) continue;
        out.push_back(parse_generator_list(part));
    }
    if (out.empty()) throw EmptyInput();
    return out;
}

inline std::string format_generator_list(const std::vector<Deg>& gens) {
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(gens[i]);
    }
    return s;
}

inline std::string format_affine_generator_list(const std::vector<Vec>& gens) {
    std::string s;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += ';';
        s += format_generator_list(gens[i]);
    }
    return s;
}

}  // namespace sgr
