#pragma once

#include "motivic/motive_scalar.hpp"
#include "motivic/qseries.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace motivic {

/// A class v = (a, beta, rank) of the grading lattice Z + Z^r + Z.
///
/// `a` is the signed holomorphic-Euler coordinate (a = -n for the classes
/// (-n, -beta, r)), `beta` the effective curve class, `rank` 0 or 1. Rank 0
/// classes are (-n, 0, 0) with n >= 0; rank 1 classes carry any `a` and
/// componentwise nonnegative `beta`.
struct GradedClass {
    int a = 0;
    std::vector<int> beta;
    int rank = 0;

    /// (-n, 0, 0) in a lattice with curve rank r.
    static GradedClass gamma0(int n, std::size_t curve_rank);
    /// (a, beta, 1).
    static GradedClass gamma1(int a, std::vector<int> beta);

    /// Throws std::invalid_argument when outside Gamma^0 u Gamma^1.
    void validate() const;
    bool is_gamma0() const noexcept { return rank == 0; }

    friend auto operator<=>(const GradedClass &x, const GradedClass &y)
    {
        if (auto c = x.rank <=> y.rank; c != 0) {
            return c;
        }
        if (auto c = x.beta <=> y.beta; c != 0) {
            return c;
        }
        return x.a <=> y.a;
    }
    friend bool operator==(const GradedClass &, const GradedClass &) = default;
};

/// Componentwise sum; throws std::domain_error("leaves Γ⁰∪Γ¹") for rank 2.
GradedClass operator+(const GradedClass &v, const GradedClass &w);

/// `(a, [b1,b2], r)`.
std::string to_string(const GradedClass &v);

/// Truncation region, rectangular per rank sector.
///
/// Rank 1: a_min <= a <= a_max, 0 <= beta <= beta_max. Rank 0: classes
/// (-n, 0, 0) with 0 <= n <= gamma0_depth, which defaults to a_max - a_min so
/// that every Gamma^0 shift between two rank 1 classes of the window is kept.
struct Window {
    int a_min = 0;
    int a_max = 0;
    std::vector<int> beta_max;
    std::optional<int> gamma0_depth;

    std::size_t curve_rank() const noexcept { return beta_max.size(); }
    int depth() const noexcept { return gamma0_depth.value_or(a_max - a_min); }
    bool contains(const GradedClass &v) const noexcept;
    /// All classes of the window, in class order.
    std::vector<GradedClass> classes() const;
    void validate() const;

    friend bool operator==(const Window &, const Window &) = default;
};

/// Integer antisymmetric form chi(v, w) twisting the *-product.
///
/// `standard()` is chi(v, w) = rank(v) a(w) - rank(w) a(v). `from_matrix`
/// reads a (r+2)x(r+2) matrix M over coordinates (a, beta..., rank) with
/// chi(v, w) = v^T M w; it must be antisymmetric and satisfy
/// chi((-n,0,0), v) = n for every rank 1 class v. `trivial()` is chi = 0 and
/// is exempt from that constraint; it describes the untwisted product.
class PairingForm {
public:
    enum class Mode { Standard, Matrix, Trivial };
    using Matrix = std::vector<std::vector<long>>;

    static PairingForm standard();
    /// Throws std::invalid_argument naming the violated condition.
    static PairingForm from_matrix(Matrix m);
    static PairingForm trivial();

    Mode mode() const noexcept { return mode_; }
    const Matrix &matrix() const noexcept { return matrix_; }

    long operator()(const GradedClass &v, const GradedClass &w) const;

private:
    Mode mode_ = Mode::Standard;
    Matrix matrix_;
};

/// An element of the completed twisted algebra, truncated to a window.
class TorusElement {
public:
    using Terms = std::map<GradedClass, MotiveScalar>;

    explicit TorusElement(Window window);
    static TorusElement monomial(Window window, const GradedClass &v, MotiveScalar coeff = MotiveScalar(1));
    /// x^{(0,0,0)}; the window must contain the zero class.
    static TorusElement one(Window window);

    const Window &window() const noexcept { return window_; }
    const Terms &terms() const noexcept { return terms_; }
    /// Set when an operation dropped terms falling outside the window.
    bool truncated() const noexcept { return truncated_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool supported_in_gamma0() const noexcept;

    /// Adds c x^v. Throws std::out_of_range("outside truncation window").
    void add_term(const GradedClass &v, const MotiveScalar &c);
    /// Coefficient of x^v. Throws std::out_of_range("outside truncation window").
    MotiveScalar extract(const GradedClass &v) const;

    TorusElement operator-() const;
    TorusElement &operator+=(const TorusElement &o);
    TorusElement &operator-=(const TorusElement &o);
    TorusElement &operator*=(const MotiveScalar &c);

    friend TorusElement operator+(TorusElement a, const TorusElement &b) { return a += b; }
    friend TorusElement operator-(TorusElement a, const TorusElement &b) { return a -= b; }
    friend TorusElement operator*(TorusElement a, const MotiveScalar &c) { return a *= c; }
    /// Compares window and coefficients; the truncation flag is ignored.
    friend bool operator==(const TorusElement &x, const TorusElement &y)
    {
        return x.window_ == y.window_ && x.terms_ == y.terms_;
    }

private:
    friend TorusElement twisted_product(const TorusElement &, const TorusElement &, const PairingForm &);

    Window window_;
    Terms terms_;
    bool truncated_ = false;
};

/// x^v * x^w = L^{chi(v,w)/2} x^{v+w} = (-u)^{chi(v,w)} x^{v+w}, extended bilinearly.
TorusElement star_mul(const TorusElement &x, const TorusElement &y, const PairingForm &form);
/// x^v . x^w = x^{v+w}.
TorusElement untwisted_mul(const TorusElement &x, const TorusElement &y);
/// {e, x} = e * x - x * e.
TorusElement bracket(const TorusElement &e, const TorusElement &x, const PairingForm &form);

/// exp({e, -})(x) = x + {e,x} + {e,{e,x}}/2! + ...
///
/// `e` must be supported in Gamma^0 with a <= -1, so each bracket lowers the
/// a-coordinate and the sum closes inside the window. Throws
/// std::domain_error("non-nilpotent adjoint at truncation") otherwise.
TorusElement exp_adjoint(const TorusElement &e, const TorusElement &x, const PairingForm &form);

/// exp / log inside the commutative Gamma^0 sector, identified with q-series
/// through q = x^{(-1,0,0)}.
TorusElement exp_gamma0(const TorusElement &e);
TorusElement log_gamma0(const TorusElement &x);

/// Gamma^0 element -> series of order depth() (coefficient of q^n at class (-n,0,0)).
QSeries gamma0_to_series(const TorusElement &x);
TorusElement series_to_gamma0(const QSeries &f, const Window &window);

} // namespace motivic
