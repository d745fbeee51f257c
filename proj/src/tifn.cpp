#include "ifdea/tifn.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace ifdea {

namespace {

[[noreturn]] void throw_ordering(const char* lhs, double a, const char* rhs, double b) {
    throw std::invalid_argument(std::string("TIFN ordering violated: ") + lhs + " = " +
                                std::to_string(a) + " > " + rhs + " = " + std::to_string(b));
}

void append_double(std::string& out, double v) {
    std::array<char, 32> buf{};
    auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    out.append(buf.data(), ptr);
}

double parse_double(std::string_view text, size_t& pos) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
        throw std::invalid_argument("TIFN parse: expected a number at offset " +
                                    std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    pos = static_cast<size_t>(ptr - text.data());
    while (pos < text.size() && text[pos] == ' ') ++pos;
    return value;
}

void expect_char(std::string_view text, size_t& pos, char c) {
    if (pos >= text.size() || text[pos] != c) {
        throw std::invalid_argument(std::string("TIFN parse: expected '") + c + "' at offset " +
                                    std::to_string(pos) + " in '" + std::string(text) + "'");
    }
    ++pos;
}

}  // namespace

Tifn::Tifn(double mem_lower, double mode, double mem_upper,
           double nonmem_lower, double nonmem_upper)
    : mem_lower_(mem_lower),
      mode_(mode),
      mem_upper_(mem_upper),
      nonmem_lower_(nonmem_lower),
      nonmem_upper_(nonmem_upper) {
    if (!(nonmem_lower_ <= mem_lower_)) throw_ordering("p'L", nonmem_lower_, "pL", mem_lower_);
    if (!(mem_lower_ <= mode_)) throw_ordering("pL", mem_lower_, "pM", mode_);
    if (!(mode_ <= mem_upper_)) throw_ordering("pM", mode_, "pU", mem_upper_);
    if (!(mem_upper_ <= nonmem_upper_)) throw_ordering("pU", mem_upper_, "p'U", nonmem_upper_);
}

Tifn Tifn::from_crisp(double c) { return Tifn(c, c, c, c, c); }

double Tifn::expected_value() const {
    return (nonmem_lower_ + mem_lower_ + 4.0 * mode_ + mem_upper_ + nonmem_upper_) / 8.0;
}

double Tifn::membership_at(double x) const {
    if (x == mode_) return 1.0;
    if (x > mem_lower_ && x < mode_) return (x - mem_lower_) / (mode_ - mem_lower_);
    if (x > mode_ && x < mem_upper_) return (mem_upper_ - x) / (mem_upper_ - mode_);
    return 0.0;
}

double Tifn::nonmembership_at(double x) const {
    if (x == mode_) return 0.0;
    if (x > nonmem_lower_ && x < mode_) return (mode_ - x) / (mode_ - nonmem_lower_);
    if (x > mode_ && x < nonmem_upper_) return (x - mode_) / (nonmem_upper_ - mode_);
    return 1.0;
}

double Tifn::hesitation_at(double x) const {
    double h = 1.0 - membership_at(x) - nonmembership_at(x);
    return std::clamp(h, 0.0, 1.0);
}

std::string Tifn::to_string() const {
    std::string out;
    out.reserve(64);
    out.push_back('(');
    append_double(out, mem_lower_);
    out.push_back(',');
    append_double(out, mode_);
    out.push_back(',');
    append_double(out, mem_upper_);
    out.push_back(';');
    append_double(out, nonmem_lower_);
    out.push_back(',');
    append_double(out, nonmem_upper_);
    out.push_back(')');
    return out;
}

Tifn Tifn::parse(std::string_view text) {
    size_t pos = 0;
    while (pos < text.size() && text[pos] == ' ') ++pos;
    expect_char(text, pos, '(');
    double pl = parse_double(text, pos);
    expect_char(text, pos, ',');
    double pm = parse_double(text, pos);
    expect_char(text, pos, ',');
    double pu = parse_double(text, pos);
    expect_char(text, pos, ';');
    double npl = parse_double(text, pos);
    expect_char(text, pos, ',');
    double npu = parse_double(text, pos);
    expect_char(text, pos, ')');
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos != text.size()) {
        throw std::invalid_argument("TIFN parse: trailing characters in '" + std::string(text) + "'");
    }
    return Tifn(pl, pm, pu, npl, npu);
}

Tifn operator+(const Tifn& p, const Tifn& q) {
    return Tifn(p.mem_lower() + q.mem_lower(), p.mode() + q.mode(),
                p.mem_upper() + q.mem_upper(), p.nonmem_lower() + q.nonmem_lower(),
                p.nonmem_upper() + q.nonmem_upper());
}

Tifn operator-(const Tifn& p, const Tifn& q) {
    return Tifn(p.mem_lower() - q.mem_upper(), p.mode() - q.mode(),
                p.mem_upper() - q.mem_lower(), p.nonmem_lower() - q.nonmem_upper(),
                p.nonmem_upper() - q.nonmem_lower());
}

Tifn operator*(const Tifn& p, const Tifn& q) {
    if (!(p.nonmem_lower() > 0.0) || !(q.nonmem_lower() > 0.0)) {
        throw std::domain_error("TIFN multiplication requires strictly positive operands");
    }
    return Tifn(p.mem_lower() * q.mem_lower(), p.mode() * q.mode(),
                p.mem_upper() * q.mem_upper(), p.nonmem_lower() * q.nonmem_lower(),
                p.nonmem_upper() * q.nonmem_upper());
}

Tifn operator/(const Tifn& p, const Tifn& q) {
    if (!(p.nonmem_lower() > 0.0) || !(q.nonmem_lower() > 0.0)) {
        throw std::domain_error("TIFN division requires strictly positive operands");
    }
    return Tifn(p.mem_lower() / q.mem_upper(), p.mode() / q.mode(),
                p.mem_upper() / q.mem_lower(), p.nonmem_lower() / q.nonmem_upper(),
                p.nonmem_upper() / q.nonmem_lower());
}

Tifn scalar_mul(double lambda, const Tifn& p) {
    if (lambda >= 0.0) {
        return Tifn(lambda * p.mem_lower(), lambda * p.mode(), lambda * p.mem_upper(),
                    lambda * p.nonmem_lower(), lambda * p.nonmem_upper());
    }
    return Tifn(lambda * p.mem_upper(), lambda * p.mode(), lambda * p.mem_lower(),
                lambda * p.nonmem_upper(), lambda * p.nonmem_lower());
}

}  // namespace ifdea
