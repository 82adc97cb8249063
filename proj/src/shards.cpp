#include "blrc/shards.hpp"

#include "blrc/basis.hpp"
#include "blrc/codefile.hpp"
#include "blrc/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iterator>
#include <stdexcept>

namespace blrc {

namespace fs = std::filesystem;

namespace {

constexpr char kMagic[8] = {'B', 'L', 'R', 'C', 'S', 'H', 'R', 'D'};

template <class T>
void put(std::string& out, T v)
{
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xFF));
}

template <class T>
T get(const std::string& in, std::size_t& pos)
{
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += sizeof(T);
    return static_cast<T>(v);
}

std::uint16_t symbolBytesFor(const BlrcCode& code)
{
    switch (code.field().degree()) {
    case 8:
        return 1;
    case 16:
        return 2;
    default:
        throw std::invalid_argument("shard files need a field with m = 8 or m = 16, got " + code.field().describe());
    }
}

std::string readAll(const fs::path& p)
{
    std::ifstream in(p, std::ios::binary);
    if (!in)
        throw FormatError("cannot open " + p.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void writeAll(const fs::path& p, const std::string& bytes)
{
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out || !out.write(bytes.data(), static_cast<std::streamsize>(bytes.size())))
        throw FormatError("cannot write " + p.string());
}

// Payload of one shard as symbols.
struct Shard {
    ShardHeader header;
    std::vector<Symbol> symbols;
};

Shard loadShard(const BlrcCode& code, const fs::path& dir, int index)
{
    const fs::path p = dir / shardFileName(index);
    const std::string bytes = readAll(p);
    Shard s;
    s.header = ShardHeader::parse(bytes);
    const auto& h = s.header;
    if (h.codeHash != codeHash(code) || h.n != code.n() || h.k != code.k())
        throw FormatError(p.string() + " was written with a different code");
    if (h.index != index)
        throw FormatError(p.string() + " holds block " + std::to_string(h.index + 1));
    if (h.symbolBytes != symbolBytesFor(code))
        throw FormatError(p.string() + " has the wrong symbol width");
    if (bytes.size() != ShardHeader::kSize + h.stripes * h.symbolBytes)
        throw FormatError(p.string() + " is truncated");
    s.symbols.resize(h.stripes);
    const auto* data = reinterpret_cast<const unsigned char*>(bytes.data() + ShardHeader::kSize);
    for (std::uint64_t i = 0; i < h.stripes; ++i)
        s.symbols[i] = h.symbolBytes == 1 ? data[i] : static_cast<Symbol>(data[2 * i] | (data[2 * i + 1] << 8));
    return s;
}

void storeShard(const fs::path& p, const ShardHeader& h, const std::vector<Symbol>& symbols)
{
    std::string bytes = h.serialize();
    bytes.reserve(ShardHeader::kSize + symbols.size() * h.symbolBytes);
    for (Symbol v : symbols) {
        bytes.push_back(static_cast<char>(v & 0xFF));
        if (h.symbolBytes == 2)
            bytes.push_back(static_cast<char>(v >> 8));
    }
    writeAll(p, bytes);
}

// out[s] += c * in[s] for every stripe.
void axpy(const Field& f, Symbol c, const std::vector<Symbol>& in, std::vector<Symbol>& out)
{
    if (c == 0)
        return;
    if (const Symbol* row = f.productRow(c)) {
        for (std::size_t s = 0; s < in.size(); ++s)
            out[s] ^= row[in[s]];
        return;
    }
    for (std::size_t s = 0; s < in.size(); ++s)
        out[s] ^= f.mul(c, in[s]);
}

bool consistent(const ShardHeader& a, const ShardHeader& b)
{
    return a.stripes == b.stripes && a.originalLength == b.originalLength;
}

} // namespace

std::string ShardHeader::serialize() const
{
    std::string out(kMagic, sizeof kMagic);
    put<std::uint16_t>(out, kVersion);
    put(out, symbolBytes);
    put(out, index);
    put(out, n);
    put(out, k);
    put<std::uint16_t>(out, 0);
    put(out, codeHash);
    put(out, stripes);
    put(out, originalLength);
    return out;
}

ShardHeader ShardHeader::parse(const std::string& bytes)
{
    if (bytes.size() < kSize || std::memcmp(bytes.data(), kMagic, sizeof kMagic) != 0)
        throw FormatError("not a shard file");
    std::size_t pos = sizeof kMagic;
    if (get<std::uint16_t>(bytes, pos) != kVersion)
        throw FormatError("unsupported shard version");
    ShardHeader h;
    h.symbolBytes = get<std::uint16_t>(bytes, pos);
    h.index = get<std::uint16_t>(bytes, pos);
    h.n = get<std::uint16_t>(bytes, pos);
    h.k = get<std::uint16_t>(bytes, pos);
    get<std::uint16_t>(bytes, pos);
    h.codeHash = get<std::uint64_t>(bytes, pos);
    h.stripes = get<std::uint64_t>(bytes, pos);
    h.originalLength = get<std::uint64_t>(bytes, pos);
    return h;
}

std::string shardFileName(int index)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "shard-%02d.blrc", index + 1);
    return buf;
}

EncodeSummary encodeFile(const BlrcCode& code, const fs::path& input, const fs::path& dir)
{
    const std::uint16_t sb = symbolBytesFor(code);
    const std::string data = readAll(input);
    const auto k = static_cast<std::size_t>(code.k());
    const auto n = static_cast<std::size_t>(code.n());
    const std::size_t stripeBytes = k * sb;
    const std::uint64_t stripes = (data.size() + stripeBytes - 1) / stripeBytes;

    // Column i of the data, one symbol per stripe.
    std::vector<std::vector<Symbol>> cols(n, std::vector<Symbol>(stripes, 0));
    const auto* bytes = reinterpret_cast<const unsigned char*>(data.data());
    for (std::size_t pos = 0; pos < data.size(); pos += sb) {
        const std::size_t sym = pos / sb;
        Symbol v = bytes[pos];
        if (sb == 2 && pos + 1 < data.size())
            v = static_cast<Symbol>(v | (bytes[pos + 1] << 8));
        cols[sym % k][sym / k] = v;
    }
    const Matrix& p = code.parity();
    for (std::size_t j = 0; j < p.cols(); ++j)
        for (std::size_t i = 0; i < k; ++i)
            axpy(code.field(), p(i, j), cols[i], cols[k + j]);

    fs::create_directories(dir);
    EncodeSummary out{stripes, data.size(), {}};
    ShardHeader h;
    h.symbolBytes = sb;
    h.n = static_cast<std::uint16_t>(n);
    h.k = static_cast<std::uint16_t>(k);
    h.codeHash = codeHash(code);
    h.stripes = stripes;
    h.originalLength = data.size();
    for (std::size_t i = 0; i < n; ++i) {
        h.index = static_cast<std::uint16_t>(i);
        const fs::path path = dir / shardFileName(static_cast<int>(i));
        storeShard(path, h, cols[i]);
        out.written.push_back(path);
    }
    return out;
}

std::vector<int> missingShards(const BlrcCode& code, const fs::path& dir)
{
    std::vector<int> out;
    for (int i = 0; i < code.n(); ++i)
        if (!fs::exists(dir / shardFileName(i)))
            out.push_back(i);
    return out;
}

DecodeSummary decodeFile(const BlrcCode& code, const fs::path& dir, const fs::path& output)
{
    DecodeSummary out;
    out.missing = missingShards(code, dir);
    const Matrix& g = code.generator();
    const auto k = static_cast<std::size_t>(code.k());

    // First k present shards with independent generator columns.
    VectorBasis basis(code.field(), k);
    std::vector<Symbol> col(k);
    for (int c = 0; c < code.n() && basis.rank() < k; ++c) {
        if (std::find(out.missing.begin(), out.missing.end(), c) != out.missing.end())
            continue;
        for (std::size_t r = 0; r < k; ++r)
            col[r] = g(r, static_cast<std::size_t>(c));
        if (basis.insert(col))
            out.used.push_back(c);
    }
    if (basis.rank() < k)
        throw Undecodable(out.missing);

    // Survivor values v = data * G_S, so data = v * G_S^{-1}.
    const Matrix recover = inverse(g.selectColumns(out.used));
    std::vector<Shard> shards;
    for (int c : out.used) {
        shards.push_back(loadShard(code, dir, c));
        if (!consistent(shards.front().header, shards.back().header))
            throw FormatError("shards disagree on stripe count or file length");
    }
    const ShardHeader& h = shards.front().header;
    std::vector<std::vector<Symbol>> data(k, std::vector<Symbol>(h.stripes, 0));
    for (std::size_t j = 0; j < k; ++j)
        for (std::size_t i = 0; i < k; ++i)
            axpy(code.field(), recover(j, i), shards[j].symbols, data[i]);

    std::string bytes(h.stripes * k * h.symbolBytes, '\0');
    for (std::uint64_t s = 0; s < h.stripes; ++s)
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t at = (s * k + i) * h.symbolBytes;
            bytes[at] = static_cast<char>(data[i][s] & 0xFF);
            if (h.symbolBytes == 2)
                bytes[at + 1] = static_cast<char>(data[i][s] >> 8);
        }
    if (h.originalLength > bytes.size())
        throw FormatError("shard header claims more bytes than the shards hold");
    bytes.resize(h.originalLength);
    writeAll(output, bytes);
    out.bytes = bytes.size();
    return out;
}

RepairSummary repairShards(const BlrcCode& code, const fs::path& dir, std::vector<int> erased)
{
    const std::vector<int> absent = missingShards(code, dir);
    if (erased.empty())
        erased = absent;
    // Absent shards that were not asked for cannot serve as helpers; zeroing
    // their generator columns keeps them out of every minimal helper set.
    Matrix g = code.generator();
    for (int c : absent)
        if (std::find(erased.begin(), erased.end(), c) == erased.end())
            for (std::size_t r = 0; r < g.rows(); ++r)
                g(r, static_cast<std::size_t>(c)) = 0;
    RepairSummary out;
    out.plan = minimalRepair(g, ErasurePattern(code.n(), erased));
    if (out.plan.erased.empty())
        return out;
    const auto coeffs = repairCoefficients(g, out.plan);

    std::vector<Shard> helpers;
    for (int h : out.plan.helpers) {
        helpers.push_back(loadShard(code, dir, h));
        out.read.push_back(dir / shardFileName(h));
        if (!consistent(helpers.front().header, helpers.back().header))
            throw FormatError("helper shards disagree on stripe count or file length");
    }
    ShardHeader h = helpers.front().header;
    const auto& lost = out.plan.erased.indices();
    for (std::size_t e = 0; e < lost.size(); ++e) {
        std::vector<Symbol> rebuilt(h.stripes, 0);
        for (std::size_t j = 0; j < helpers.size(); ++j)
            axpy(code.field(), coeffs[e][j], helpers[j].symbols, rebuilt);
        h.index = static_cast<std::uint16_t>(lost[e]);
        const fs::path path = dir / shardFileName(lost[e]);
        storeShard(path, h, rebuilt);
        out.written.push_back(path);
    }
    return out;
}

} // namespace blrc
