#include "blrc/codefile.hpp"

#include "blrc/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace blrc {

namespace {

std::vector<std::string> tokens(const std::string& line)
{
    std::istringstream in(line);
    std::vector<std::string> out;
    for (std::string t; in >> t;)
        out.push_back(t);
    return out;
}

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next meaningful line, split into tokens; empty at end of input.
    std::vector<std::string> next()
    {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            if (!line.empty() && line.back() == '\r')
                line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#')
                continue;
            raw_ = line.substr(first);
            return tokens(line);
        }
        raw_.clear();
        return {};
    }

    const std::string& raw() const { return raw_; }

    [[noreturn]] void fail(const std::string& what) const
    {
        throw FormatError("line " + std::to_string(number_) + ": " + what);
    }

private:
    std::istream& in_;
    int number_ = 0;
    std::string raw_;
};

long parseNumber(const LineReader& lr, const std::string& s, int base)
{
    std::string_view v(s);
    if (base == 16 && (v.starts_with("0x") || v.starts_with("0X")))
        v.remove_prefix(2);
    long value = 0;
    const auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), value, base);
    if (v.empty() || ec != std::errc() || end != v.data() + v.size())
        lr.fail("bad number '" + s + "'");
    return value;
}

int expectInt(LineReader& lr, const std::string& key)
{
    const auto t = lr.next();
    if (t.size() != 2 || t[0] != key)
        lr.fail("expected '" + key + " <value>'");
    return static_cast<int>(parseNumber(lr, t[1], 10));
}

std::string hexWord(std::uint32_t v, int digits)
{
    static const char* hex = "0123456789abcdef";
    std::string s(static_cast<std::size_t>(digits), '0');
    for (int i = digits - 1; i >= 0; --i, v >>= 4)
        s[static_cast<std::size_t>(i)] = hex[v & 0xF];
    return s;
}

void writeBody(std::ostream& out, const CodeDocument& doc, bool withProvenance)
{
    const auto& s = doc.spec;
    const int digits = (s.field.degree() + 3) / 4;
    out << "blrc-code 1\n";
    out << "n " << s.n << "\nk " << s.k << "\nw " << s.w << '\n';
    out << "field " << s.field.degree() << " 0x" << std::hex << s.field.spec().polynomial << std::dec << '\n';
    if (withProvenance && !doc.provenance.empty())
        out << "provenance " << doc.provenance << '\n';
    out << "parity\n";
    for (std::size_t r = 0; r < doc.parity.rows(); ++r) {
        for (std::size_t c = 0; c < doc.parity.cols(); ++c)
            out << (c ? " " : "") << hexWord(doc.parity(r, c), digits);
        out << '\n';
    }
    out << "end\n";
}

} // namespace

BlrcCode CodeDocument::toCode() const
{
    return BlrcCode(spec, parity);
}

CodeDocument CodeDocument::from(const BlrcCode& code, std::string provenance)
{
    return CodeDocument{code.spec(), code.parity(), std::move(provenance)};
}

CodeDocument readCodeDocument(std::istream& in)
{
    LineReader lr(in);
    auto t = lr.next();
    if (t.size() != 2 || t[0] != "blrc-code")
        lr.fail("expected header 'blrc-code 1'");
    if (t[1] != "1")
        lr.fail("unsupported format version " + t[1]);

    CodeDocument doc;
    doc.spec.n = expectInt(lr, "n");
    doc.spec.k = expectInt(lr, "k");
    doc.spec.w = expectInt(lr, "w");
    t = lr.next();
    if (t.size() != 3 || t[0] != "field")
        lr.fail("expected 'field <m> <polynomial>'");
    const FieldSpec fs{static_cast<int>(parseNumber(lr, t[1], 10)),
                       static_cast<std::uint32_t>(parseNumber(lr, t[2], 16))};
    try {
        doc.spec.field = Field(fs);
        doc.spec.check();
    } catch (const std::invalid_argument& e) {
        lr.fail(e.what());
    }

    t = lr.next();
    if (!t.empty() && t[0] == "provenance") {
        doc.provenance = lr.raw().substr(std::string("provenance").size());
        doc.provenance.erase(0, doc.provenance.find_first_not_of(" \t"));
        while (!doc.provenance.empty() && (doc.provenance.back() == ' ' || doc.provenance.back() == '\t'))
            doc.provenance.pop_back();
        t = lr.next();
    }
    if (t.size() != 1 || t[0] != "parity")
        lr.fail("expected 'parity'");

    const auto k = static_cast<std::size_t>(doc.spec.k);
    const auto r = static_cast<std::size_t>(doc.spec.r());
    doc.parity = Matrix(doc.spec.field, k, r);
    for (std::size_t row = 0; row < k; ++row) {
        t = lr.next();
        if (t.size() != r)
            lr.fail("parity row " + std::to_string(row + 1) + " needs " + std::to_string(r) + " coefficients, found " +
                    std::to_string(t.size()));
        for (std::size_t c = 0; c < r; ++c) {
            const long v = parseNumber(lr, t[c], 16);
            if (v < 0 || !doc.spec.field.contains(static_cast<std::uint32_t>(v)))
                lr.fail("coefficient " + t[c] + " is not in " + doc.spec.field.describe());
            doc.parity(row, c) = static_cast<Symbol>(v);
        }
    }
    t = lr.next();
    if (t.size() != 1 || t[0] != "end")
        lr.fail("expected 'end' after " + std::to_string(k) + " parity rows");
    return doc;
}

CodeDocument readCodeDocument(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw FormatError("cannot open " + path.string());
    return readCodeDocument(in);
}

void writeCodeDocument(std::ostream& out, const CodeDocument& doc)
{
    writeBody(out, doc, true);
}

void writeCodeDocument(const std::filesystem::path& path, const CodeDocument& doc)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw FormatError("cannot write " + path.string());
    writeCodeDocument(out, doc);
}

std::string formatCodeDocument(const CodeDocument& doc)
{
    std::ostringstream out;
    writeCodeDocument(out, doc);
    return out.str();
}

std::uint64_t codeHash(const BlrcCode& code)
{
    std::ostringstream out;
    writeBody(out, CodeDocument::from(code), false);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : out.str()) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return h;
}

} // namespace blrc
