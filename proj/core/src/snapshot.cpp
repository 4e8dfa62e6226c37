#include "exemplar/snapshot.hpp"

#include <fstream>
#include <string>

#include "exemplar/error.hpp"

namespace exemplar::snapshot {

namespace {

std::string header_line(std::string_view kind) {
    return "EXEMPLAR " + std::string(kind) + " v" + std::to_string(kFormatVersion) + "\n";
}

}  // namespace

std::vector<std::uint8_t> encode(std::string_view kind, const nlohmann::json& payload) {
    const auto header = header_line(kind);
    std::vector<std::uint8_t> bytes(header.begin(), header.end());
    const auto body = nlohmann::json::to_cbor(payload);
    bytes.insert(bytes.end(), body.begin(), body.end());
    return bytes;
}

nlohmann::json decode(std::string_view kind, const std::vector<std::uint8_t>& bytes) {
    const auto expected = header_line(kind);
    if (bytes.size() < expected.size() || !std::equal(expected.begin(), expected.end(), bytes.begin())) {
        throw IoError("not a '" + std::string(kind) + "' snapshot (version " + std::to_string(kFormatVersion) +
                      ")");
    }
    try {
        return nlohmann::json::from_cbor(bytes.begin() + static_cast<std::ptrdiff_t>(expected.size()), bytes.end());
    } catch (const nlohmann::json::exception& e) {
        throw IoError(std::string("corrupt snapshot payload: ") + e.what());
    }
}

std::vector<std::uint8_t> read_bytes(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_bytes(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw IoError("short write to " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + ": " + ec.message());
}

void write(const std::filesystem::path& path, std::string_view kind, const nlohmann::json& payload) {
    write_bytes(path, encode(kind, payload));
}

nlohmann::json read(const std::filesystem::path& path, std::string_view kind) {
    return decode(kind, read_bytes(path));
}

std::uint64_t fingerprint(const std::vector<std::uint8_t>& bytes) {
    std::uint64_t hash = 14695981039346656037ULL;
    for (auto b : bytes) {
        hash ^= b;
        hash *= 1099511628211ULL;
    }
    return hash;
}

}  // namespace exemplar::snapshot
