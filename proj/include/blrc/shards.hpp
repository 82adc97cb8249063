#pragma once

#include "blrc/analysis.hpp"
#include "blrc/code.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace blrc {

/// Fixed 44-byte little-endian header at the start of every shard file.
struct ShardHeader {
    static constexpr std::size_t kSize = 44;
    static constexpr std::uint16_t kVersion = 1;

    std::uint16_t symbolBytes = 1; // 1 for GF(2^8), 2 for GF(2^16)
    std::uint16_t index = 0;       // 0-based block index
    std::uint16_t n = 0;
    std::uint16_t k = 0;
    std::uint64_t codeHash = 0;
    std::uint64_t stripes = 0;
    std::uint64_t originalLength = 0; // bytes of the encoded file, before padding

    std::string serialize() const;
    // Throws FormatError on a bad magic, version or size.
    static ShardHeader parse(const std::string& bytes);
};

// "shard-01.blrc" for block index 0.
std::string shardFileName(int index);

struct EncodeSummary {
    std::uint64_t stripes = 0;
    std::uint64_t originalLength = 0;
    std::vector<std::filesystem::path> written;
};

// Splits the file into stripes of k symbols (zero padded at the end) and
// writes n shard files into `dir`. Needs m = 8 or m = 16.
EncodeSummary encodeFile(const BlrcCode& code, const std::filesystem::path& input, const std::filesystem::path& dir);

struct DecodeSummary {
    std::vector<int> missing;              // 0-based indices of absent shards
    std::vector<int> used;                 // shards read
    std::uint64_t bytes = 0;
};

// Rebuilds the original file from the shards present in `dir`. Throws
// Undecodable listing the absent shards when they cannot be recovered, and
// FormatError for shards of another code.
DecodeSummary decodeFile(const BlrcCode& code, const std::filesystem::path& dir, const std::filesystem::path& output);

struct RepairSummary {
    RepairPlan plan;
    std::vector<std::filesystem::path> read;    // helper shards, nothing else
    std::vector<std::filesystem::path> written;
};

// Recreates the erased shards (all absent ones when `erased` is empty) from a
// minimal helper set found by minimalRepair, reading only those helpers.
// Other absent shards are never chosen as helpers.
RepairSummary repairShards(const BlrcCode& code, const std::filesystem::path& dir, std::vector<int> erased = {});

// 0-based indices of shard files absent from `dir`.
std::vector<int> missingShards(const BlrcCode& code, const std::filesystem::path& dir);

} // namespace blrc
