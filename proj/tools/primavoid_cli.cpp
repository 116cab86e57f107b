/*
 * Copyright 2026 the primavoid authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end. Talks to the library exclusively through the C API
// in primavoid.h; JSON handling here is only for argument plumbing and the
// TSV rendering of reports.
//
// Exit codes: 0 success, 1 I/O or validation failure, 2 violated bound or
// numerical drift, 3 the avoidance set contains no primitive element (a
// finding, not an error).

#include <primavoid.h>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitViolation = 2;
constexpr int kExitNoPrimitive = 3;
constexpr std::uint64_t kHardCap = std::uint64_t{1} << 24;

struct StringDeleter {
    void operator()(char* p) const { pv_string_free(p); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct FieldDeleter {
    void operator()(pv_field* f) const { pv_field_free(f); }
};
using OwnedField = std::unique_ptr<pv_field, FieldDeleter>;

struct ConfigDeleter {
    void operator()(pv_config* c) const { pv_config_free(c); }
};
using OwnedConfig = std::unique_ptr<pv_config, ConfigDeleter>;

int exit_for(pv_status st) {
    return st == PV_ERR_NUMERICAL_DRIFT ? kExitViolation : kExitUsage;
}

void report_error(pv_status st) {
    std::cerr << "error: " << pv_status_name(st) << ": " << pv_last_error() << "\n";
}

// Inline JSON when the argument starts with '{' or '['; otherwise a file path
// (an optional leading '@' is stripped).
std::optional<std::string> load_arg(const std::string& arg) {
    if (arg.empty()) return std::nullopt;
    if (arg.front() == '{' || arg.front() == '[') return arg;
    std::string path = arg.front() == '@' ? arg.substr(1) : arg;
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot read " << path << "\n";
        return std::nullopt;
    }
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void print_kv_tsv(const json& j, const std::string& prefix, std::ostream& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it)
            print_kv_tsv(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
    } else if (j.is_array()) {
        out << prefix << "\t" << j.dump() << "\n";
    } else {
        out << prefix << "\t" << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
    }
}

void emit(const json& j, const std::string& format) {
    if (format == "tsv") {
        print_kv_tsv(j, "", std::cout);
    } else {
        std::cout << j.dump() << "\n";
    }
}

struct ConfigSource {
    std::string field_arg;
    std::string config_arg;
    std::uint64_t random_n = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
};

// Materializes the configs a command runs over, together with the seed each
// one came from (random config i uses seed + i).
bool gather_configs(const ConfigSource& src, std::vector<OwnedConfig>& configs,
                    std::vector<std::optional<std::uint64_t>>& seeds) {
    std::optional<std::string> field_json;
    if (!src.field_arg.empty()) {
        field_json = load_arg(src.field_arg);
        if (!field_json) return false;
    }

    if (!src.config_arg.empty()) {
        auto text = load_arg(src.config_arg);
        if (!text) return false;
        json cfg = json::parse(*text, nullptr, false);
        if (cfg.is_discarded()) {
            std::cerr << "error: malformed config JSON\n";
            return false;
        }
        if (!cfg.contains("field")) {
            if (!field_json) {
                std::cerr << "error: config does not embed a field and --field was not given\n";
                return false;
            }
            json fj = json::parse(*field_json, nullptr, false);
            if (fj.is_discarded()) {
                std::cerr << "error: malformed field JSON\n";
                return false;
            }
            cfg["field"] = fj;
        }
        pv_config* raw = nullptr;
        pv_status st = pv_config_from_json(cfg.dump().c_str(), &raw);
        if (st != PV_OK) {
            report_error(st);
            return false;
        }
        configs.emplace_back(raw);
        seeds.push_back(std::nullopt);
        return true;
    }

    if (src.random_n > 0) {
        if (!field_json) {
            std::cerr << "error: --random needs --field\n";
            return false;
        }
        pv_field* fraw = nullptr;
        pv_status st = pv_field_from_json(field_json->c_str(), &fraw);
        if (st != PV_OK) {
            report_error(st);
            return false;
        }
        OwnedField field(fraw);
        for (std::uint64_t i = 0; i < src.random_n; ++i) {
            pv_config* raw = nullptr;
            st = pv_config_random(field.get(), src.seed + i, &raw);
            if (st != PV_OK) {
                report_error(st);
                return false;
            }
            configs.emplace_back(raw);
            seeds.push_back(src.seed + i);
        }
        return true;
    }

    // Default configuration: power basis, all shifts zero.
    if (!field_json) {
        std::cerr << "error: give --config, or --field (optionally with --random)\n";
        return false;
    }
    pv_field* fraw = nullptr;
    pv_status st = pv_field_from_json(field_json->c_str(), &fraw);
    if (st != PV_OK) {
        report_error(st);
        return false;
    }
    OwnedField field(fraw);
    std::vector<std::uint32_t> zeros(pv_field_r(field.get()), 0);
    pv_config* raw = nullptr;
    st = pv_config_standard(field.get(), zeros.data(), zeros.size(), &raw);
    if (st != PV_OK) {
        report_error(st);
        return false;
    }
    configs.emplace_back(raw);
    seeds.push_back(std::nullopt);
    return true;
}

int run_count(const ConfigSource& src, std::uint64_t cap, const std::string& format) {
    std::vector<OwnedConfig> configs;
    std::vector<std::optional<std::uint64_t>> seeds;
    if (!gather_configs(src, configs, seeds)) return kExitUsage;

    bool disagreement = false, missing_witness = false;
    for (size_t i = 0; i < configs.size(); ++i) {
        char* raw = nullptr;
        pv_status st = pv_count_report(configs[i].get(), cap, seeds[i].has_value(),
                                       seeds[i].value_or(0), &raw);
        if (st != PV_OK) {
            report_error(st);
            return exit_for(st);
        }
        OwnedString text(raw);
        json rep = json::parse(text.get());
        emit(rep, format);
        disagreement = disagreement || !rep["counts"]["agree"].get<bool>();
        missing_witness = missing_witness || rep["witness"].is_null();
    }
    if (disagreement) return kExitViolation;
    return missing_witness ? kExitNoPrimitive : kExitOk;
}

int run_verify(const ConfigSource& src, std::uint64_t cap, const std::string& format) {
    std::vector<OwnedConfig> configs;
    std::vector<std::optional<std::uint64_t>> seeds;
    if (!gather_configs(src, configs, seeds)) return kExitUsage;

    int exit_code = kExitOk;
    for (size_t i = 0; i < configs.size(); ++i) {
        char* raw = nullptr;
        pv_status st = pv_verify_bounds_report(configs[i].get(), cap, seeds[i].has_value(),
                                               seeds[i].value_or(0), &raw);
        if (st != PV_OK) {
            report_error(st);
            return exit_for(st);
        }
        OwnedString text(raw);
        json rep = json::parse(text.get());
        if (format == "json") {
            // one line per bound report, then the summary without the bulk
            for (const json& r : rep["reports"]) std::cout << r.dump() << "\n";
            json summary = rep;
            summary.erase("reports");
            std::cout << summary.dump() << "\n";
        } else {
            json summary = rep;
            summary.erase("reports");
            print_kv_tsv(summary, "", std::cout);
        }
        if (!rep["all_hold"].get<bool>()) exit_code = std::max(exit_code, kExitViolation);
    }
    return exit_code;
}

int run_field(const std::string& field_arg, const std::string& format) {
    auto text = load_arg(field_arg);
    if (!text) return kExitUsage;
    pv_field* raw = nullptr;
    pv_status st = pv_field_from_json(text->c_str(), &raw);
    if (st != PV_OK) {
        report_error(st);
        return kExitUsage;
    }
    OwnedField field(raw);
    char* out = nullptr;
    st = pv_field_to_json(field.get(), &out);
    if (st != PV_OK) {
        report_error(st);
        return kExitUsage;
    }
    OwnedString owned(out);
    emit(json::parse(owned.get()), format);
    return kExitOk;
}

int run_canonicalize(const ConfigSource& src, const std::string& format) {
    std::vector<OwnedConfig> configs;
    std::vector<std::optional<std::uint64_t>> seeds;
    if (!gather_configs(src, configs, seeds)) return kExitUsage;
    for (auto& cfg : configs) {
        char* out = nullptr;
        pv_status st = pv_config_to_json(cfg.get(), &out);
        if (st != PV_OK) {
            report_error(st);
            return kExitUsage;
        }
        OwnedString owned(out);
        json canon = json::parse(owned.get());
        canon["version"] = pv_version(); // still consumable as a --config input
        emit(canon, format);
    }
    return kExitOk;
}

int run_threshold(std::uint64_t q, const std::string& format) {
    if (q != 3 && q != 4 && q != 5) {
        std::cerr << "error: threshold supports q = 3, 4, 5\n";
        return kExitUsage;
    }
    char* out = nullptr;
    pv_status st = pv_threshold_report(q, &out);
    if (st != PV_OK) {
        report_error(st);
        return exit_for(st);
    }
    OwnedString owned(out);
    json rep = json::parse(owned.get());
    if (format == "tsv") {
        json flat = rep["threshold"];
        flat.erase("trace");
        print_kv_tsv(flat, "", std::cout);
    } else {
        emit(rep, format);
    }
    return kExitOk;
}

int run_table(const std::string& format) {
    char* out = nullptr;
    pv_status st = pv_limits_table_report(&out);
    if (st != PV_OK) {
        report_error(st);
        return kExitUsage;
    }
    OwnedString owned(out);
    json rep = json::parse(owned.get());
    if (format == "tsv") {
        std::cout << "q\trhs_limit\n";
        for (const json& row : rep["limits"])
            std::cout << row["q"] << "\t" << row["rhs_limit_printed"].get<std::string>() << "\n";
    } else {
        emit(rep, format);
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"primavoid: primitive elements avoiding affine hyperplanes"};
    app.set_version_flag("--version", std::string(pv_version()));
    app.require_subcommand(1);

    std::string field_arg, config_arg, format = "json";
    std::uint64_t random_n = 0, seed = 0, cap = 0, threshold_q = 0;
    bool seed_given = false;

    auto add_common = [&](CLI::App* cmd, bool with_config) {
        cmd->add_option("--format", format, "json or tsv")
            ->check(CLI::IsMember({"json", "tsv"}));
        if (with_config) {
            cmd->add_option("--field", field_arg, "field spec, inline JSON or a file path");
            cmd->add_option("--config", config_arg, "configuration, inline JSON or a file path");
            cmd->add_option("--random", random_n, "number of random configurations to generate");
            cmd->add_option("--seed", seed, "seed for --random (configuration i uses seed + i)")
                ->each([&](const std::string&) { seed_given = true; });
            cmd->add_option("--cap", cap, "enumeration cap override (hard maximum 2^24)")
                ->check(CLI::Range(std::uint64_t{1}, kHardCap));
        }
    };

    CLI::App* c_field = app.add_subcommand("field", "validate a field spec and print its canonical form");
    c_field->add_option("--field", field_arg, "field spec, inline JSON or a file path")->required();
    add_common(c_field, false);

    CLI::App* c_count = app.add_subcommand("count", "count primitive elements in the avoidance set");
    add_common(c_count, true);

    CLI::App* c_verify = app.add_subcommand("verify-bounds", "check character-sum and divisor bounds");
    add_common(c_verify, true);

    CLI::App* c_canon = app.add_subcommand("canonicalize", "bring a hyperplane family into coordinate form");
    add_common(c_canon, true);

    CLI::App* c_thresh = app.add_subcommand("threshold", "smallest degree satisfying the existence condition");
    c_thresh->add_option("q", threshold_q, "field size q (3, 4 or 5)")->required();
    add_common(c_thresh, false);

    CLI::App* c_table = app.add_subcommand("table", "limits of the existence condition RHS");
    add_common(c_table, false);

    CLI11_PARSE(app, argc, argv);

    ConfigSource src{field_arg, config_arg, random_n, seed, seed_given};
    try {
        if (c_field->parsed()) return run_field(field_arg, format);
        if (c_count->parsed()) return run_count(src, cap, format);
        if (c_verify->parsed()) return run_verify(src, cap, format);
        if (c_canon->parsed()) return run_canonicalize(src, format);
        if (c_thresh->parsed()) return run_threshold(threshold_q, format);
        if (c_table->parsed()) return run_table(format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
