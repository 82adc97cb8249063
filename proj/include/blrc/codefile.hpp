#pragma once

#include "blrc/code.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>

namespace blrc {

/// Text form of a code:
///
///     blrc-code 1
///     n 15
///     k 10
///     w 3
///     field 8 0x11d
///     provenance seed=2016 support=p1
///     parity
///     3a 00 7f 00 11
///     ...                 (k rows of r hex coefficients, 00 = structural zero)
///     end
///
/// The provenance line is optional. Blank lines and lines starting with '#'
/// are ignored on input. Coefficients are written with ceil(m/4) lowercase
/// hex digits.
struct CodeDocument {
    CodeSpec spec;
    Matrix parity;
    std::string provenance;

    // Validates; throws ConstructionFailure listing the failed clauses.
    BlrcCode toCode() const;
    static CodeDocument from(const BlrcCode& code, std::string provenance = {});
};

// Throws FormatError with the offending line number.
CodeDocument readCodeDocument(std::istream& in);
CodeDocument readCodeDocument(const std::filesystem::path& path);

void writeCodeDocument(std::ostream& out, const CodeDocument& doc);
void writeCodeDocument(const std::filesystem::path& path, const CodeDocument& doc);
std::string formatCodeDocument(const CodeDocument& doc);

// 64-bit FNV-1a of the canonical text without the provenance line; identifies
// the code in shard headers.
std::uint64_t codeHash(const BlrcCode& code);

} // namespace blrc
