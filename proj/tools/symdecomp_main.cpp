#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "symdecomp/decompose.hpp"
#include "symdecomp/report.hpp"

namespace {

using namespace symdecomp;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitGuard = 3;

struct RunConfig {
    std::string topology = "complete";
    std::string group = "auto";
    int n = 3;
    int sites = 0;
    std::string out_path;
    std::string format = "text";
    bool emit_basis = false;
    bool with_lie_closure = false;
    bool with_oracles = false;
    bool classical_symmetrizers = false;
    double zero_tol = 1e-12;
    double rank_tol = 1e-8;
    double block_tol = 1e-8;
    int threads = 1;

    json echo() const {
        return {{"topology", topology}, {"group", group},     {"n", n},
                {"sites", sites},       {"format", format},   {"emit_basis", emit_basis},
                {"with_lie_closure", with_lie_closure},       {"with_oracles", with_oracles},
                {"classical_symmetrizers", classical_symmetrizers},
                {"zero_tol", zero_tol}, {"rank_tol", rank_tol}, {"block_tol", block_tol},
                {"threads", threads}};
    }
};

GroupSpec resolve_group(const RunConfig& cfg) {
    std::string g = cfg.group;
    if (g == "auto") {
        if (cfg.topology == "complete") g = "symmetric";
        else if (cfg.topology == "ring") g = "cyclic";
        else if (cfg.topology == "central-chain") g = "reflection";
        else throw CLI::ValidationError("unknown topology: " + cfg.topology);
    }
    if (g == "symmetric") return GroupSpec::symmetric(cfg.n);
    if (g == "cyclic") return GroupSpec::cyclic(cfg.n);
    if (g == "reflection") return GroupSpec::reflection(cfg.sites > 0 ? cfg.sites : cfg.n);
    throw CLI::ValidationError("unknown group: " + g);
}

SpinNetworkModel resolve_model(const RunConfig& cfg) {
    if (cfg.topology == "complete") return hamiltonians_complete(cfg.n);
    if (cfg.topology == "ring") return hamiltonians_ring(cfg.n);
    if (cfg.topology == "central-chain") return hamiltonians_central_chain(cfg.n);
    throw CLI::ValidationError("unknown topology: " + cfg.topology);
}

GysFamily resolve_family(const RunConfig& cfg, const GroupSpec& spec) {
    if (cfg.classical_symmetrizers) {
        if (spec.kind != GroupSpec::Kind::Symmetric)
            throw CLI::ValidationError("--classical-symmetrizers requires a symmetric group");
        return family_classical(spec.degree);
    }
    return family_for(spec);
}

void write_output(const RunConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        if (!text.empty() && text.back() != '\n') std::cout << '\n';
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) throw CLI::ValidationError("cannot open output path: " + cfg.out_path);
        out << text;
    }
}

int cmd_dims(const RunConfig& cfg) {
    GroupSpec spec = resolve_group(cfg);
    std::ostringstream text;
    json j;
    j["group"] = spec.name();
    if (spec.kind == GroupSpec::Kind::Cyclic) {
        auto dim = dim_u_cyclic(spec.degree);
        text << "dim u^" << spec.name() << "(2^" << spec.degree << ") = " << dim << "\n";
        j["dim_u_G"] = dim;
        json mk = json::array();
        text << "m_k:";
        for (int k = 0; k < spec.degree; ++k) {
            auto m = multiplicity_m_k(spec.degree, k);
            text << ' ' << m;
            mk.push_back(m);
        }
        text << '\n';
        j["m_k"] = mk;
    } else if (spec.kind == GroupSpec::Kind::Symmetric) {
        auto dim = dim_u_symmetric(spec.degree);
        text << "dim u^" << spec.name() << "(2^" << spec.degree << ") = " << dim << "\n";
        j["dim_u_G"] = dim;
    } else {
        auto dim = commutant_dim_trace_oracle(spec, 2);
        text << "dim u^" << spec.name() << " (trace oracle) = " << dim << "\n";
        j["dim_u_G"] = dim;
    }
    write_output(cfg, cfg.format == "json" ? j.dump(2) : text.str());
    return kExitPass;
}

int cmd_gys(const RunConfig& cfg) {
    GroupSpec spec = resolve_group(cfg);
    GysFamily fam = resolve_family(cfg, spec);
    auto rep = verify_gys_family(fam, 2);
    std::ostringstream text;
    json j;
    j["group"] = spec.name();
    json records = json::array();
    for (const auto& rec : fam.records) {
        text << rec.label << ": " << rec.element.to_string() << '\n';
        records.push_back({{"label", rec.label},
                           {"class", fam.class_labels[rec.class_id]},
                           {"element", rec.element.to_string()}});
    }
    text << "verification: completeness " << rep.completeness << ", orthogonality "
         << rep.orthogonality << ", primitivity " << rep.primitivity << ", hermiticity "
         << rep.hermiticity << (rep.passes() ? " [pass]" : " [FAIL]") << '\n';
    j["records"] = records;
    j["verification"] = {{"completeness", rep.completeness},
                         {"orthogonality", rep.orthogonality},
                         {"primitivity", rep.primitivity},
                         {"hermiticity", rep.hermiticity},
                         {"passes", rep.passes()}};
    write_output(cfg, cfg.format == "json" ? j.dump(2) : text.str());
    return rep.passes() ? kExitPass : kExitVerifyFail;
}

int cmd_verify(const RunConfig& cfg) {
    GroupSpec spec = resolve_group(cfg);
    GysFamily fam = resolve_family(cfg, spec);
    auto rep = verify_gys_family(fam, 2);
    std::ostringstream text;
    text << "P1 completeness: " << rep.completeness << '\n'
         << "P2 orthogonality: " << rep.orthogonality << '\n'
         << "P3 primitivity: " << rep.primitivity
         << (rep.sampled_primitivity ? " (sampled)" : " (exhaustive)") << '\n'
         << "P4 hermiticity: " << rep.hermiticity << '\n';
    json j = {{"group", spec.name()},
              {"completeness", rep.completeness},
              {"orthogonality", rep.orthogonality},
              {"primitivity", rep.primitivity},
              {"hermiticity", rep.hermiticity},
              {"passes", rep.passes()}};
    if (cfg.with_oracles) {
        auto burnside = burnside_orbit_count(spec, 4);
        auto trace = commutant_dim_trace_oracle(spec, 2);
        text << "burnside(4): " << burnside << ", trace oracle: " << trace << '\n';
        j["burnside_orbit_count"] = burnside;
        j["trace_oracle"] = trace;
        if (spec.kind == GroupSpec::Kind::Cyclic) {
            std::uint64_t sum2 = 0;
            for (int k = 0; k < spec.degree; ++k) {
                auto m = multiplicity_m_k(spec.degree, k);
                sum2 += m * m;
            }
            text << "sum m_k^2: " << sum2 << ", dim formula: " << dim_u_cyclic(spec.degree)
                 << '\n';
            j["sum_mk_squared"] = sum2;
            j["dim_u_cyclic"] = dim_u_cyclic(spec.degree);
        }
    }
    text << (rep.passes() ? "PASS" : "FAIL") << '\n';
    write_output(cfg, cfg.format == "json" ? j.dump(2) : text.str());
    return rep.passes() ? kExitPass : kExitVerifyFail;
}

std::string blocks_as_text(const ControllabilityReport& report) {
    std::ostringstream text;
    text << "group: " << report.family.group.name() << '\n';
    for (const auto& r : report.basis.ranges)
        text << "class " << report.family.class_labels[r.class_id] << " copy "
             << report.family.records[r.record_index].label << ": columns [" << r.first
             << ", " << r.first + r.dim << ")\n";
    for (const auto& op : report.blocks.operators) {
        text << op.label << " (off-block " << op.off_block << ", copy mismatch "
             << op.copy_mismatch << "):\n";
        for (const auto& b : op.class_blocks) {
            for (Eigen::Index i = 0; i < b.rows(); ++i) {
                text << "  [";
                for (Eigen::Index jj = 0; jj < b.cols(); ++jj) {
                    Complex c = b(i, jj);
                    text << ' ' << c.real() << (c.imag() < 0 ? "" : "+") << c.imag() << 'i';
                }
                text << " ]\n";
            }
            text << '\n';
        }
    }
    return text.str();
}

std::string blocks_as_csv(const ControllabilityReport& report) {
    std::ostringstream csv;
    csv.precision(17);
    csv << "operator,class_block,row,col,re,im\n";
    for (const auto& op : report.blocks.operators)
        for (size_t b = 0; b < op.class_blocks.size(); ++b) {
            const auto& m = op.class_blocks[b];
            for (Eigen::Index i = 0; i < m.rows(); ++i)
                for (Eigen::Index j = 0; j < m.cols(); ++j)
                    csv << op.label << ',' << b << ',' << i << ',' << j << ','
                        << m(i, j).real() << ',' << m(i, j).imag() << '\n';
        }
    return csv.str();
}

int cmd_decompose(const RunConfig& cfg) {
    SpinNetworkModel model = resolve_model(cfg);
    auto report =
        subspace_controllability_report(model, cfg.with_lie_closure, cfg.block_tol);
    json j = report_to_json(report, cfg.echo(), cfg.emit_basis);
    if (cfg.with_oracles)
        j["oracles"] = oracle_json(model.symmetry, model.sites, 2, report.basis.ranges);
    if (cfg.format == "json") {
        write_output(cfg, j.dump(2));
    } else if (cfg.format == "csv") {
        write_output(cfg, blocks_as_csv(report));
    } else {
        write_output(cfg, blocks_as_text(report));
    }
    bool ok = report.verification.passes() &&
              report.blocks.max_off_block() < cfg.block_tol &&
              report.blocks.max_copy_mismatch() < cfg.block_tol;
    if (cfg.with_oracles) ok = ok && j["oracles"]["agree"].get<bool>();
    return ok ? kExitPass : kExitVerifyFail;
}

void load_config_file(const std::string& path, RunConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot read config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\r");
            size_t b = s.find_last_not_of(" \t\r");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "topology") cfg.topology = value;
        else if (key == "group") cfg.group = value;
        else if (key == "n") cfg.n = std::stoi(value);
        else if (key == "sites") cfg.sites = std::stoi(value);
        else if (key == "out") cfg.out_path = value;
        else if (key == "format") cfg.format = value;
        else if (key == "emit-basis") cfg.emit_basis = value == "true" || value == "1";
        else if (key == "with-lie-closure") cfg.with_lie_closure = value == "true" || value == "1";
        else if (key == "with-oracles") cfg.with_oracles = value == "true" || value == "1";
        else if (key == "classical-symmetrizers")
            cfg.classical_symmetrizers = value == "true" || value == "1";
        else if (key == "zero-tol") cfg.zero_tol = std::stod(value);
        else if (key == "rank-tol") cfg.rank_tol = std::stod(value);
        else if (key == "block-tol") cfg.block_tol = std::stod(value);
        else throw CLI::ValidationError("unknown config key: " + key);
    }
}

void add_common_options(CLI::App* cmd, RunConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "config file, one key = value per line");
    cmd->add_option("--group", cfg.group, "auto|symmetric|cyclic|reflection");
    cmd->add_option("--n", cfg.n, "model size / group degree");
    cmd->add_option("--sites", cfg.sites, "site count for reflection groups");
    cmd->add_option("--topology", cfg.topology, "complete|ring|central-chain");
    cmd->add_option("--out", cfg.out_path, "output path (stdout when omitted)");
    cmd->add_option("--format", cfg.format, "json|csv|text");
    cmd->add_flag("--emit-basis", cfg.emit_basis, "include the change of basis in the report");
    cmd->add_flag("--with-lie-closure", cfg.with_lie_closure, "compute the global Lie closure");
    cmd->add_flag("--with-oracles", cfg.with_oracles, "run the counting cross-checks");
    cmd->add_flag("--classical-symmetrizers", cfg.classical_symmetrizers,
                  "use unmodified classical symmetrizers (demonstration only)");
    cmd->add_option("--zero-tol", cfg.zero_tol, "coefficient pruning tolerance");
    cmd->add_option("--rank-tol", cfg.rank_tol, "rank-detection tolerance");
    cmd->add_option("--block-tol", cfg.block_tol, "block-structure tolerance");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symmetry-adapted block diagonalization of controlled spin networks"};
    app.require_subcommand(1);

    RunConfig cfg;
    if (const char* env = std::getenv("SYMDECOMP_THREADS")) cfg.threads = std::atoi(env);
    std::string config_path;

    auto* dims = app.add_subcommand("dims", "commutant dimension tables");
    auto* gys = app.add_subcommand("gys", "print a complete symmetrizer family");
    auto* decompose = app.add_subcommand("decompose", "full block-diagonalization pipeline");
    auto* verify = app.add_subcommand("verify", "family verification and oracle checks");
    for (auto* cmd : {dims, gys, decompose, verify}) add_common_options(cmd, cfg, config_path);

    try {
        // Two-pass parse so a config file loads first and flags override it.
        app.parse(argc, argv);
        if (!config_path.empty()) {
            RunConfig file_cfg;
            file_cfg.threads = cfg.threads;
            load_config_file(config_path, file_cfg);
            cfg = file_cfg;
            app.clear();
            app.parse(argc, argv);
        }
        if (cfg.zero_tol <= 0 || cfg.rank_tol <= 0 || cfg.block_tol <= 0)
            throw CLI::ValidationError("tolerances must be positive");
        if (dims->parsed()) return cmd_dims(cfg);
        if (gys->parsed()) return cmd_gys(cfg);
        if (decompose->parsed()) return cmd_decompose(cfg);
        return cmd_verify(cfg);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const symdecomp::guard_error& e) {
        std::cerr << "resource guard: " << e.what() << '\n';
        return kExitGuard;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitVerifyFail;
    }
}
