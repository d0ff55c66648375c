#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gqfi::io {

/// Locale-independent 9-significant-digit formatting used for every CSV
/// number (std::to_chars, general format).
std::string format_g9(double value);

/// Quote a CSV field when it contains commas or quotes.
std::string csv_escape(const std::string& field);

/// Split one CSV line honoring double-quote escaping.
std::vector<std::string> csv_split(const std::string& line);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

std::string sha256_hex(const std::string& bytes);

/// Reproducibility sidecar written next to every CLI output.
struct RunManifest {
    std::string command_line;
    std::string tool_version;
    std::string timestamp;
    std::uint64_t seed = 0;
    std::map<std::string, std::string> config;
    std::vector<std::pair<std::string, std::string>> output_digests;  // path, sha256

    std::string to_json() const;
    void write(const std::string& path) const;
    void add_output(const std::string& path);  // digests the file on disk
};

}  // namespace gqfi::io
