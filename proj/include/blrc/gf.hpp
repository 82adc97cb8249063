#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace blrc {

// Raw field symbol. Only meaningful together with the Field it came from.
using Symbol = std::uint16_t;

struct FieldSpec {
    int m = 8;
    std::uint32_t polynomial = 0x11D;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

// True iff `polynomial` (bit i = coefficient of x^i) is irreducible over GF(2).
bool isIrreducible(std::uint32_t polynomial);

// Carry-less multiply of a and b reduced modulo `polynomial` of degree m.
// Slow reference used to cross-check the table implementation.
Symbol clmulReduce(Symbol a, Symbol b, int m, std::uint32_t polynomial);

/// GF(2^m) for 1 <= m <= 16.
///
/// Multiplication goes through log/antilog tables built around a primitive
/// element found at construction, so the reduction polynomial only needs to be
/// irreducible. For m <= 8 a full product table is kept as well. The tables
/// are shared and immutable; copies are cheap and safe to use concurrently.
class Field {
public:
    // GF(2^8) with 0x11D.
    Field();
    explicit Field(FieldSpec spec);

    const FieldSpec& spec() const noexcept { return t_->spec; }
    int degree() const noexcept { return t_->spec.m; }
    std::uint32_t size() const noexcept { return t_->size; }
    Symbol generator() const noexcept { return t_->generator; }

    bool contains(std::uint32_t v) const noexcept { return v < t_->size; }

    static Symbol add(Symbol a, Symbol b) noexcept { return a ^ b; }

    Symbol mul(Symbol a, Symbol b) const noexcept
    {
        if (a == 0 || b == 0)
            return 0;
        if (!t_->product.empty())
            return t_->product[(static_cast<std::size_t>(a) << t_->spec.m) | b];
        return t_->exp[t_->log[a] + t_->log[b]];
    }

    // Throws DivisionByZero for a == 0.
    Symbol inv(Symbol a) const;
    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }
    Symbol pow(Symbol a, unsigned e) const noexcept;

    // Row of the full product table for `a` (m <= 8 only), else nullptr.
    const Symbol* productRow(Symbol a) const noexcept
    {
        if (t_->product.empty())
            return nullptr;
        return t_->product.data() + (static_cast<std::size_t>(a) << t_->spec.m);
    }

    std::string describe() const;

    friend bool operator==(const Field& a, const Field& b) noexcept
    {
        return a.t_ == b.t_ || a.t_->spec == b.t_->spec;
    }

private:
    struct Tables {
        FieldSpec spec;
        std::uint32_t size = 0;
        Symbol generator = 0;
        std::vector<std::uint32_t> log;
        std::vector<Symbol> exp; // doubled so log sums need no modulo
        std::vector<Symbol> product;
    };

    static std::shared_ptr<const Tables> build(FieldSpec spec);

    std::shared_ptr<const Tables> t_;
};

/// A field element bound to its field. Mixing fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, std::uint32_t value);

    const Field& field() const noexcept { return field_; }
    Symbol value() const noexcept { return value_; }

    FieldElement inverse() const;

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend bool operator==(const FieldElement& a, const FieldElement& b)
    {
        return a.field_ == b.field_ && a.value_ == b.value_;
    }

private:
    Field field_;
    Symbol value_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);

} // namespace blrc
