#include "ecainfo/harness.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "ecainfo/rng.hpp"
#include "ecainfo/version.hpp"

namespace ecainfo {

std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xCBF29CE484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001B3ULL;
    }
    return h;
}

std::string to_hex(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string format_double(double v) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc{}) throw std::runtime_error("double formatting failed");
    return std::string(buf, ptr);
}

namespace {

std::string symmetry_string(const ClassificationRecord& rec) {
    std::string s;
    s.reserve(rec.te_r_symmetries.size() + 2);
    s += symmetry_letter(rec.te1_symmetry);
    s += ':';
    for (Symmetry sym : rec.te_r_symmetries) s += symmetry_letter(sym);
    return s;
}

} // namespace

std::string classification_csv(const ClassificationResult& result) {
    std::string out = "representative,wolfram_class,te1_bits,te_r_min,te_r_max,"
                      "max_norm_change,info_class,chosen_symmetries\n";
    for (const ClassificationRecord& rec : result.records) {
        out += std::to_string(rec.representative.code);
        out += ',';
        out += wolfram_class_name(rec.wolfram_class);
        out += ',';
        out += format_double(rec.te1);
        out += ',';
        out += format_double(rec.te_r_min);
        out += ',';
        out += format_double(rec.te_r_max);
        out += ',';
        out += format_double(rec.max_change);
        out += ',';
        out += info_class_name(rec.info_class);
        out += ',';
        out += symmetry_string(rec);
        out += '\n';
    }
    return out;
}

std::string fig1_single_cell_csv(const ClassificationResult& result) {
    std::string out = "rule,te_bits\n";
    for (const ClassificationRecord& rec : result.records) {
        out += std::to_string(rec.representative.code);
        out += ',';
        out += format_double(rec.te1);
        out += '\n';
    }
    return out;
}

std::string fig1_ensemble_csv(const ClassificationResult& result) {
    std::string out = "rule,te_bits\n";
    for (const ClassificationRecord& rec : result.records) {
        out += std::to_string(rec.representative.code);
        out += ',';
        out += format_double(rec.te_r.empty() ? 0.0 : rec.te_r.front());
        out += '\n';
    }
    return out;
}

std::string fig2_csv(const ClassificationResult& result) {
    std::string out = "rule,te1_bits,max_norm_change\n";
    for (const ClassificationRecord& rec : result.records) {
        out += std::to_string(rec.representative.code);
        out += ',';
        out += format_double(rec.te1);
        out += ',';
        out += format_double(rec.max_change);
        out += '\n';
    }
    return out;
}

std::map<std::uint8_t, InfoClass> parse_classification_csv(std::string_view csv) {
    std::map<std::uint8_t, InfoClass> out;
    std::istringstream in{std::string(csv)};
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty classification CSV");
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string field;
        while (std::getline(ls, field, ',')) fields.push_back(field);
        if (fields.size() < 7) throw std::invalid_argument("malformed classification CSV row");
        const int rule = std::stoi(fields[0]);
        const auto cls = parse_info_class(fields[6]);
        if (rule < 0 || rule > 255 || !cls)
            throw std::invalid_argument("malformed classification CSV row");
        out[static_cast<std::uint8_t>(rule)] = *cls;
    }
    return out;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string manifest_json(const ClassificationResult& result, unsigned threads,
                          const std::vector<OutputFile>& outputs, std::string_view started_at,
                          std::string_view finished_at) {
    const ExperimentConfig& cfg = result.config;
    nlohmann::ordered_json j;
    j["tool"] = kToolName;
    j["version"] = kToolVersion;
    j["started_at"] = started_at;
    j["finished_at"] = finished_at;
    j["threads"] = threads;
    j["config"] = {
        {"width", cfg.width},
        {"steps", cfg.steps},
        {"burn_in", cfg.burn_in},
        {"n_inputs", cfg.n_inputs},
        {"ensemble", input_kind_name(cfg.ensemble)},
        {"k", cfg.te.k},
        {"l", cfg.te.l},
        {"window_rows", cfg.window_rows()},
        {"usable_samples_per_pair", cfg.usable_samples()},
        {"change_threshold", cfg.thresholds.change_threshold},
        {"zero_floor_bits", cfg.thresholds.zero_floor},
    };
    j["master_seed"] = cfg.master_seed;
    j["rng_algorithm"] = kRngAlgorithmId;
    j["seed_derivation"] = kSeedDerivationId;
    j["computed_te_threshold_bits"] = result.te_threshold;

    nlohmann::ordered_json seeds = nlohmann::ordered_json::array();
    for (const ClassificationRecord& rec : result.records) {
        nlohmann::ordered_json entry;
        entry["representative"] = rec.representative.code;
        std::vector<std::uint64_t> per_input(rec.te_r.size());
        for (std::size_t i = 0; i < per_input.size(); ++i)
            per_input[i] = derive_seed(cfg.master_seed, rec.representative.code,
                                       static_cast<int>(i), 0);
        entry["input_seeds"] = per_input;
        seeds.push_back(std::move(entry));
    }
    j["per_input_seeds"] = std::move(seeds);

    nlohmann::ordered_json files = nlohmann::ordered_json::array();
    for (const OutputFile& f : outputs)
        files.push_back({{"file", f.name}, {"fnv1a64", f.digest_hex}, {"bytes", f.bytes}});
    j["outputs"] = std::move(files);
    return j.dump(2) + "\n";
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_file(const std::filesystem::path& path, const std::vector<std::uint8_t>& bytes) {
    write_file(path, std::string_view(reinterpret_cast<const char*>(bytes.data()), bytes.size()));
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return std::move(ss).str();
}

ClassifyRunPaths write_classify_outputs(const ClassificationResult& result, unsigned threads,
                                        const std::filesystem::path& out_dir,
                                        std::string_view started_at) {
    std::filesystem::create_directories(out_dir);
    const char* kind = input_kind_name(result.config.ensemble);

    ClassifyRunPaths paths;
    paths.records_csv = out_dir / "classification.csv";
    paths.fig1a = out_dir / "fig1a_single_cell.csv";
    paths.fig1b = out_dir / (std::string("fig1b_") + kind + ".csv");
    paths.fig2 = out_dir / "fig2_change.csv";
    paths.manifest = out_dir / "manifest.json";

    std::vector<OutputFile> outputs;
    auto emit = [&](const std::filesystem::path& p, const std::string& bytes) {
        write_file(p, bytes);
        outputs.push_back({p.filename().string(), to_hex(fnv1a64(bytes)), bytes.size()});
    };
    emit(paths.records_csv, classification_csv(result));
    emit(paths.fig1a, fig1_single_cell_csv(result));
    emit(paths.fig1b, fig1_ensemble_csv(result));
    emit(paths.fig2, fig2_csv(result));
    write_file(paths.manifest, manifest_json(result, threads, outputs, started_at, utc_timestamp()));
    return paths;
}

std::string field_text(const SpacetimeField& field) {
    std::string out;
    out.reserve(field.rows.size() * (field.width() + 1));
    for (const Configuration& row : field.rows) {
        out += row.to_string();
        out += '\n';
    }
    return out;
}

std::vector<std::uint8_t> field_binary(const SpacetimeField& field) {
    const std::uint32_t w = field.width();
    const std::uint32_t steps = field.steps();
    const std::size_t row_bytes = (w + 7) / 8;
    std::vector<std::uint8_t> out;
    out.reserve(16 + row_bytes * field.rows.size());
    auto push_u32 = [&](std::uint32_t v) {
        for (int b = 0; b < 4; ++b) out.push_back(static_cast<std::uint8_t>(v >> (8 * b)));
    };
    out.push_back('E');
    out.push_back('C');
    out.push_back('A');
    out.push_back('F');
    push_u32(w);
    push_u32(steps);
    push_u32(0); // flags
    for (const Configuration& row : field.rows) {
        std::vector<std::uint8_t> packed(row_bytes, 0);
        for (std::uint32_t i = 0; i < w; ++i)
            if (row.get(i)) packed[i / 8] |= static_cast<std::uint8_t>(1u << (i % 8));
        out.insert(out.end(), packed.begin(), packed.end());
    }
    return out;
}

std::string hierarchy_report(const std::vector<HierarchyViolation>& violations) {
    std::string out = std::to_string(violations.size()) + " violations\n";
    for (const HierarchyViolation& v : violations) {
        out += "violation: ";
        out += std::to_string(v.edge.rep_a);
        out += " (";
        out += info_class_name(v.class_a);
        out += ") -> ";
        out += std::to_string(v.edge.rep_b);
        out += " (";
        out += info_class_name(v.class_b);
        out += ") N=";
        out += std::to_string(v.edge.witness.projection.n);
        out += " projection=";
        out += v.edge.witness.projection.bits_string();
        out += '\n';
    }
    return out;
}

} // namespace ecainfo
