#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ecainfo/classify.hpp"
#include "ecainfo/coarse_grain.hpp"

namespace ecainfo {

/// FNV-1a 64-bit digest; the manifest records output files with this.
std::uint64_t fnv1a64(std::string_view bytes);
std::string to_hex(std::uint64_t v);

/// Shortest round-trip decimal form (std::to_chars); identical doubles give
/// identical bytes, so CSV output is reproducible bit-for-bit.
std::string format_double(double v);

// --- classify outputs -----------------------------------------------------

/// The per-representative records table. Columns:
/// representative,wolfram_class,te1_bits,te_r_min,te_r_max,max_norm_change,
/// info_class,chosen_symmetries. chosen_symmetries is the single-cell
/// variant letter, a colon, then one letter per ensemble input.
std::string classification_csv(const ClassificationResult& result);

/// Scatter data: single-cell <TE> per representative (rule,te_bits).
std::string fig1_single_cell_csv(const ClassificationResult& result);
/// Scatter data: <TE> for ensemble input 0 per representative (rule,te_bits).
std::string fig1_ensemble_csv(const ClassificationResult& result);
/// Scatter data: rule,te1_bits,max_norm_change.
std::string fig2_csv(const ClassificationResult& result);

/// Reads the `representative` and `info_class` columns back from
/// classification_csv output.
std::map<std::uint8_t, InfoClass> parse_classification_csv(std::string_view csv);

struct OutputFile {
    std::string name;
    std::string digest_hex;
    std::size_t bytes = 0;
};

/// Manifest JSON: tool version, config echo, RNG/seed-derivation ids,
/// per-input seeds, timestamps, thread count and output digests — enough to
/// re-run the experiment bit-identically.
std::string manifest_json(const ClassificationResult& result, unsigned threads,
                          const std::vector<OutputFile>& outputs, std::string_view started_at,
                          std::string_view finished_at);

/// Current UTC time, ISO-8601.
std::string utc_timestamp();

struct ClassifyRunPaths {
    std::filesystem::path records_csv;
    std::filesystem::path fig1a;
    std::filesystem::path fig1b;
    std::filesystem::path fig2;
    std::filesystem::path manifest;
};

/// Run the classification and write all output files under out_dir.
ClassifyRunPaths write_classify_outputs(const ClassificationResult& result, unsigned threads,
                                        const std::filesystem::path& out_dir,
                                        std::string_view started_at);

// --- evolve outputs ---------------------------------------------------------

/// One row per line, '0'/'1' characters, T+1 lines.
std::string field_text(const SpacetimeField& field);

/// Packed binary dump. 16-byte little-endian header: magic "ECAF", width,
/// steps, flags (0); then T+1 rows of ceil(W/8) bytes, cell i at bit i%8 of
/// byte i/8.
std::vector<std::uint8_t> field_binary(const SpacetimeField& field);

// --- coarse-grain outputs ---------------------------------------------------

/// Violation listing against a classification; first line reports the count.
std::string hierarchy_report(const std::vector<HierarchyViolation>& violations);

/// Throws std::runtime_error on I/O failure.
void write_file(const std::filesystem::path& path, std::string_view bytes);
void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes);
std::string read_file(const std::filesystem::path& path);

} // namespace ecainfo
