// Exact scalar field (arbitrary-precision rationals or IEEE doubles) with an
// opt-in operation-counting context. Rationals are kept reduced with the sign
// on the numerator and a positive denominator.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <variant>

#include <gmpxx.h>

namespace nbz {

// Thrown for malformed textual input (scalar strings, instance files).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when an operation's stated preconditions are violated.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown by linear solves on a singular coefficient matrix.
struct singular_matrix_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class FieldMode { rational, f64 };

std::string to_string(FieldMode mode);
FieldMode field_mode_from_string(std::string_view text);

// Tally of field operations. Multiplications and divisions both land in
// `multiplications`; additions and subtractions land in `additions`.
// Negation is free.
struct OpCounter {
    std::uint64_t multiplications = 0;
    std::uint64_t additions = 0;

    friend bool operator==(const OpCounter&, const OpCounter&) = default;
};

namespace detail {

inline thread_local OpCounter* active_counter = nullptr;

inline void count_mul() {
    if (active_counter != nullptr) ++active_counter->multiplications;
}

inline void count_add() {
    if (active_counter != nullptr) ++active_counter->additions;
}

}  // namespace detail

// Installs a counter as the active counting context for the current thread.
// Single-owner: one counted computation per counter. Scopes nest; the inner
// scope shadows the outer one.
class CountingScope {
  public:
    explicit CountingScope(OpCounter& counter)
        : previous_(detail::active_counter) {
        detail::active_counter = &counter;
    }
    ~CountingScope() { detail::active_counter = previous_; }

    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

  private:
    OpCounter* previous_;
};

// Runs `fn` under a fresh counting context and returns its result together
// with the exact operation tally.
template <typename Fn>
auto with_counting(Fn&& fn)
    -> std::pair<std::invoke_result_t<Fn&>, OpCounter> {
    OpCounter counter;
    CountingScope scope(counter);
    auto result = std::forward<Fn>(fn)();
    return {std::move(result), counter};
}

class Scalar {
  public:
    // Defaults to the exact rational zero.
    Scalar() : value_(mpq_class(0)) {}

    static Scalar from_mpq(mpq_class value);
    static Scalar from_double(double value) { return Scalar(value); }
    static Scalar from_int(long value, FieldMode mode);
    static Scalar zero(FieldMode mode) { return from_int(0, mode); }
    static Scalar one(FieldMode mode) { return from_int(1, mode); }

    FieldMode mode() const noexcept {
        return std::holds_alternative<double>(value_) ? FieldMode::f64
                                                      : FieldMode::rational;
    }

    bool is_zero() const;
    const mpq_class& rat() const;
    double f64() const;

    // Reduced "p" / "p/q" text in rational mode, shortest round-trip text in
    // f64 mode.
    std::string str() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    Scalar operator-() const;

    Scalar& operator+=(const Scalar& other) { return *this = *this + other; }
    Scalar& operator-=(const Scalar& other) { return *this = *this - other; }
    Scalar& operator*=(const Scalar& other) { return *this = *this * other; }

    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) {
        return !(a == b);
    }
    // Exact order in rational mode, IEEE order in f64 mode.
    friend bool operator<(const Scalar& a, const Scalar& b);

  private:
    explicit Scalar(mpq_class value) : value_(std::move(value)) {}
    explicit Scalar(double value) : value_(value) {}

    std::variant<mpq_class, double> value_;
};

Scalar abs(const Scalar& a);

// Parses "-?digits", "-?digits/digits" (both modes) or a decimal literal
// (f64 mode only). Rationals are returned reduced; a zero denominator is a
// parse_error.
Scalar parse_scalar(std::string_view text, FieldMode mode = FieldMode::rational);

}  // namespace nbz
