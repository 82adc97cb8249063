#include "blrc/gf.hpp"

#include "blrc/errors.hpp"

#include <bit>
#include <cstdio>
#include <map>
#include <mutex>

namespace blrc {

namespace {

int degreeOf(std::uint32_t p)
{
    return p == 0 ? -1 : 31 - std::countl_zero(p);
}

// Remainder of a modulo b over GF(2)[x].
std::uint32_t polyMod(std::uint32_t a, std::uint32_t b)
{
    const int db = degreeOf(b);
    for (int da = degreeOf(a); da >= db; da = degreeOf(a))
        a ^= b << (da - db);
    return a;
}

} // namespace

bool isIrreducible(std::uint32_t polynomial)
{
    const int deg = degreeOf(polynomial);
    if (deg < 1)
        return false;
    // Trial division by every polynomial of degree 1..deg/2.
    for (std::uint32_t d = 2; degreeOf(d) <= deg / 2; ++d) {
        if (polyMod(polynomial, d) == 0)
            return false;
    }
    return true;
}

Symbol clmulReduce(Symbol a, Symbol b, int m, std::uint32_t polynomial)
{
    std::uint32_t acc = 0;
    for (int i = 0; i < m; ++i) {
        if (b & (1u << i))
            acc ^= static_cast<std::uint32_t>(a) << i;
    }
    return static_cast<Symbol>(polyMod(acc, polynomial));
}

std::shared_ptr<const Field::Tables> Field::build(FieldSpec spec)
{
    if (spec.m < 1 || spec.m > 16)
        throw std::invalid_argument("field degree must be in [1, 16], got " + std::to_string(spec.m));
    if (degreeOf(spec.polynomial) != spec.m || (spec.polynomial & 1u) == 0)
        throw std::invalid_argument("reduction polynomial must have degree m and a constant term");
    if (!isIrreducible(spec.polynomial))
        throw std::invalid_argument("reduction polynomial is reducible over GF(2)");

    auto t = std::make_shared<Tables>();
    t->spec = spec;
    t->size = 1u << spec.m;
    const std::uint32_t order = t->size - 1;

    // Smallest primitive element: its powers must visit every nonzero element.
    std::vector<Symbol> powers(order);
    for (std::uint32_t g = (order == 1 ? 1 : 2); g < t->size; ++g) {
        std::vector<bool> seen(t->size, false);
        Symbol x = 1;
        std::uint32_t i = 0;
        for (; i < order; ++i) {
            if (seen[x])
                break;
            seen[x] = true;
            powers[i] = x;
            x = clmulReduce(x, static_cast<Symbol>(g), spec.m, spec.polynomial);
        }
        if (i == order) {
            t->generator = static_cast<Symbol>(g);
            break;
        }
    }

    t->log.assign(t->size, 0);
    t->exp.assign(2 * order, 0);
    for (std::uint32_t i = 0; i < order; ++i) {
        t->exp[i] = powers[i];
        t->exp[i + order] = powers[i];
        t->log[powers[i]] = i;
    }

    if (spec.m <= 8) {
        t->product.assign(static_cast<std::size_t>(t->size) * t->size, 0);
        for (std::uint32_t a = 1; a < t->size; ++a)
            for (std::uint32_t b = 1; b < t->size; ++b)
                t->product[(a << spec.m) | b] = t->exp[t->log[a] + t->log[b]];
    }
    return t;
}

Field::Field() : Field(FieldSpec{}) {}

Field::Field(FieldSpec spec)
{
    // Tables for a given spec are built once per process.
    static std::mutex mu;
    static std::map<std::pair<int, std::uint32_t>, std::shared_ptr<const Tables>> cache;
    std::lock_guard lock(mu);
    auto& slot = cache[{spec.m, spec.polynomial}];
    if (!slot)
        slot = build(spec);
    t_ = slot;
}

Symbol Field::inv(Symbol a) const
{
    if (a == 0)
        throw DivisionByZero();
    const std::uint32_t order = t_->size - 1;
    return t_->exp[(order - t_->log[a]) % order];
}

Symbol Field::pow(Symbol a, unsigned e) const noexcept
{
    if (e == 0)
        return 1;
    if (a == 0)
        return 0;
    const std::uint64_t order = t_->size - 1;
    return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * e) % order];
}

std::string Field::describe() const
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "GF(2^%d) mod 0x%X", t_->spec.m, t_->spec.polynomial);
    return buf;
}

FieldElement::FieldElement(Field field, std::uint32_t value)
    : field_(std::move(field)), value_(static_cast<Symbol>(value))
{
    if (!field_.contains(value))
        throw std::invalid_argument("value outside field");
}

FieldElement FieldElement::inverse() const
{
    return {field_, field_.inv(value_)};
}

FieldElement operator+(const FieldElement& a, const FieldElement& b)
{
    if (!(a.field_ == b.field_))
        throw FieldMismatch();
    return {a.field_, Field::add(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b)
{
    if (!(a.field_ == b.field_))
        throw FieldMismatch();
    return {a.field_, a.field_.mul(a.value_, b.value_)};
}

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }

} // namespace blrc
