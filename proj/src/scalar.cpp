#include "nbz/scalar.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <system_error>

namespace nbz {

namespace {

[[noreturn]] void mode_mismatch() {
    throw precondition_error("field mode mismatch between scalar operands");
}

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

bool all_zero_digits(std::string_view s) {
    for (char c : s) {
        if (c != '0') return false;
    }
    return true;
}

// "-?digits(/digits)?" with an unsigned, nonzero denominator.
bool valid_rational_text(std::string_view s, bool& zero_denominator) {
    zero_denominator = false;
    if (!s.empty() && s.front() == '-') s.remove_prefix(1);
    const auto slash = s.find('/');
    if (slash == std::string_view::npos) return all_digits(s);
    const auto num = s.substr(0, slash);
    const auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) return false;
    if (all_zero_digits(den)) {
        zero_denominator = true;
        return false;
    }
    return true;
}

double parse_double_strict(std::string_view text) {
    const std::string buf(text);
    const char* begin = buf.c_str();
    char* end = nullptr;
    errno = 0;
    const double value = std::strtod(begin, &end);
    if (end == begin || *end != '\0')
        throw parse_error("malformed f64 scalar: '" + buf + "'");
    return value;
}

}  // namespace

std::string to_string(FieldMode mode) {
    return mode == FieldMode::rational ? "rational" : "f64";
}

FieldMode field_mode_from_string(std::string_view text) {
    if (text == "rational") return FieldMode::rational;
    if (text == "f64") return FieldMode::f64;
    throw parse_error("unknown field mode: '" + std::string(text) + "'");
}

Scalar Scalar::from_mpq(mpq_class value) {
    value.canonicalize();
    return Scalar(std::move(value));
}

Scalar Scalar::from_int(long value, FieldMode mode) {
    if (mode == FieldMode::rational) return Scalar(mpq_class(value));
    return Scalar(static_cast<double>(value));
}

bool Scalar::is_zero() const {
    if (const auto* d = std::get_if<double>(&value_)) return *d == 0.0;
    return sgn(std::get<mpq_class>(value_)) == 0;
}

const mpq_class& Scalar::rat() const {
    if (mode() != FieldMode::rational)
        throw precondition_error("scalar is not in rational mode");
    return std::get<mpq_class>(value_);
}

double Scalar::f64() const {
    if (mode() != FieldMode::f64)
        throw precondition_error("scalar is not in f64 mode");
    return std::get<double>(value_);
}

std::string Scalar::str() const {
    if (const auto* d = std::get_if<double>(&value_)) {
        char buf[64];
        const auto res = std::to_chars(buf, buf + sizeof(buf), *d);
        return std::string(buf, res.ptr);
    }
    return std::get<mpq_class>(value_).get_str();
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) mode_mismatch();
    detail::count_add();
    if (const auto* d = std::get_if<double>(&a.value_))
        return Scalar(*d + std::get<double>(b.value_));
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) +
                            std::get<mpq_class>(b.value_)));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) mode_mismatch();
    detail::count_add();
    if (const auto* d = std::get_if<double>(&a.value_))
        return Scalar(*d - std::get<double>(b.value_));
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) -
                            std::get<mpq_class>(b.value_)));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) mode_mismatch();
    detail::count_mul();
    if (const auto* d = std::get_if<double>(&a.value_))
        return Scalar(*d * std::get<double>(b.value_));
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) *
                            std::get<mpq_class>(b.value_)));
}

Scalar operator/(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) mode_mismatch();
    detail::count_mul();  // divisions land in the multiplication tally
    if (const auto* d = std::get_if<double>(&a.value_))
        return Scalar(*d / std::get<double>(b.value_));
    if (b.is_zero()) throw precondition_error("exact division by zero");
    return Scalar(mpq_class(std::get<mpq_class>(a.value_) /
                            std::get<mpq_class>(b.value_)));
}

Scalar Scalar::operator-() const {
    if (const auto* d = std::get_if<double>(&value_)) return Scalar(-*d);
    return Scalar(mpq_class(-std::get<mpq_class>(value_)));
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) mode_mismatch();
    if (const auto* d = std::get_if<double>(&a.value_))
        return *d == std::get<double>(b.value_);
    return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

bool operator<(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode()) mode_mismatch();
    if (const auto* d = std::get_if<double>(&a.value_))
        return *d < std::get<double>(b.value_);
    return std::get<mpq_class>(a.value_) < std::get<mpq_class>(b.value_);
}

Scalar abs(const Scalar& a) {
    return a < Scalar::zero(a.mode()) ? -a : a;
}

Scalar parse_scalar(std::string_view text, FieldMode mode) {
    if (mode == FieldMode::rational) {
        bool zero_den = false;
        if (!valid_rational_text(text, zero_den)) {
            if (zero_den)
                throw parse_error("zero denominator in scalar: '" +
                                  std::string(text) + "'");
            throw parse_error("malformed rational scalar: '" +
                              std::string(text) + "'");
        }
        return Scalar::from_mpq(mpq_class(std::string(text), 10));
    }
    const auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        const double num = parse_double_strict(text.substr(0, slash));
        const double den = parse_double_strict(text.substr(slash + 1));
        if (den == 0.0)
            throw parse_error("zero denominator in scalar: '" +
                              std::string(text) + "'");
        return Scalar::from_double(num / den);
    }
    return Scalar::from_double(parse_double_strict(text));
}

}  // namespace nbz
