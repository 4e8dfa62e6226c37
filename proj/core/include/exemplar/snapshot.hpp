#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace exemplar::snapshot {

/// Current on-disk format version. Readers accept this version only.
inline constexpr int kFormatVersion = 1;

/// Snapshot layout: the line "EXEMPLAR <kind> v<version>\n" followed by the CBOR-encoded payload.
/// Object keys are sorted by nlohmann::json, so identical payloads encode to identical bytes.
std::vector<std::uint8_t> encode(std::string_view kind, const nlohmann::json& payload);
nlohmann::json decode(std::string_view kind, const std::vector<std::uint8_t>& bytes);

void write(const std::filesystem::path& path, std::string_view kind, const nlohmann::json& payload);
nlohmann::json read(const std::filesystem::path& path, std::string_view kind);

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path);
void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);

/// FNV-1a 64 over the bytes; used to tie derived snapshots to the corpus they were built from.
std::uint64_t fingerprint(const std::vector<std::uint8_t>& bytes);

}  // namespace exemplar::snapshot
