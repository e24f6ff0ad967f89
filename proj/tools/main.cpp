#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "sullivan/corpus.hpp"
#include "sullivan/io.hpp"

namespace {

using namespace sullivan;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_output(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + out_path);
    out << text;
}

Model load_model(const std::string& path) {
    std::string name = path;
    auto slash = name.find_last_of('/');
    if (slash != std::string::npos) name = name.substr(slash + 1);
    if (name.size() > 4 && name.ends_with(".sul")) name.resize(name.size() - 4);
    return parse_model(read_file(path), name);
}

int default_window(const Model& m) {
    ModelInvariants inv = model_invariants(m);
    return std::max(1, inv.fd_predicted + m.algebra().max_degree());
}

int print_violations(const ValidationReport& report) {
    for (const auto& v : report.violations) std::cout << "violation: " << v.message << "\n";
    return report.ok() ? kExitOk : kExitCheckFailed;
}

int cmd_validate(const std::string& path) {
    Model m = load_model(path);
    ValidationReport report = validate_model(m);
    if (report.ok()) {
        std::cout << "ok: " << m.name() << " is a valid minimal model ("
                  << m.algebra().size() << " generators)\n";
        return kExitOk;
    }
    return print_violations(report);
}

int cmd_cohomology(const std::string& path, int up_to, bool machine, const std::string& out) {
    Model m = load_model(path);
    ValidationReport vr = validate_model(m);
    if (!vr.ok()) return print_violations(vr);
    int window = up_to > 0 ? up_to : default_window(m);
    CohomologyReport rep = betti_table(m, window);
    write_output(out, machine ? emit_cohomology_machine(m, rep) : emit_cohomology_human(m, rep));
    return kExitOk;
}

int cmd_check(const std::string& path, int up_to, bool machine, const std::string& out) {
    Model m = load_model(path);
    ValidationReport vr = validate_model(m);
    if (!vr.ok()) return print_violations(vr);
    int window = up_to > 0 ? up_to : default_window(m);
    CohomologyReport rep = betti_table(m, window);
    HilaliVerdict verdict = check_hilali(m, rep);
    write_output(out, machine ? emit_report_machine(verdict, rep) : emit_report_human(verdict, rep));
    return verdict.holds ? kExitOk : kExitCheckFailed;
}

int cmd_enumerate(int fd, const std::string& audit_path, const std::string& out) {
    auto rows = enumerate_fh(fd);
    std::string text;
    for (const auto& row : rows) text += format_enum_row(row) + "\n";
    write_output(out, text);
    if (audit_path.empty()) return kExitOk;
    auto reference = parse_enum_rows(read_file(audit_path));
    AuditResult audit = audit_against_reference(fd, reference);
    for (const auto& row : audit.missing_from_enumeration)
        std::cout << "missing: " << format_enum_row(row) << "\n";
    for (const auto& row : audit.extra_in_enumeration)
        std::cout << "extra: " << format_enum_row(row) << "\n";
    std::cout << "audit: " << audit.missing_from_enumeration.size() << " missing, "
              << audit.extra_in_enumeration.size() << " extra\n";
    return audit.missing_from_enumeration.empty() ? kExitOk : kExitCheckFailed;
}

int cmd_corpus(bool run_all, bool machine) {
    auto entries = all_entries();
    if (!run_all) {
        for (const auto& e : entries) std::cout << e.name << "\n";
        return kExitOk;
    }
    bool all_ok = true;
    for (const auto& e : entries) {
        ModelInvariants inv = model_invariants(e.model);
        CohomologyReport rep = betti_table(e.model, std::max(1, inv.fd_predicted));
        Classification cls = classify_model(e.model);
        bool ok = true;
        std::string why;
        if (e.expected) {
            const ExpectedResults& x = *e.expected;
            auto mismatch = [&why](const std::string& field, long got, long want) {
                why += (why.empty() ? "" : ", ") + field + "=" + std::to_string(got) +
                       " (expected " + std::to_string(want) + ")";
            };
            if (inv.dim_v != x.dim_v) mismatch("dim_v", inv.dim_v, x.dim_v);
            if (rep.total_dim != x.total_dim) mismatch("total_dim", rep.total_dim, x.total_dim);
            if (rep.fd_observed != x.fd) mismatch("fd", rep.fd_observed, x.fd);
            if (cls.pure != x.pure) mismatch("pure", cls.pure, x.pure);
            if (cls.hyperelliptic != x.hyperelliptic) mismatch("hyperelliptic", cls.hyperelliptic, x.hyperelliptic);
            if (cls.odd_generated != x.odd_generated) mismatch("odd_generated", cls.odd_generated, x.odd_generated);
            ok = why.empty();
        }
        all_ok = all_ok && ok;
        if (machine) {
            HilaliVerdict verdict = check_hilali(e.model, rep);
            std::cout << emit_report_machine(verdict, rep);
        } else {
            std::cout << (ok ? "ok   " : "FAIL ") << e.name << " dim_v=" << inv.dim_v
                      << " total_dim=" << rep.total_dim << " fd=" << rep.fd_observed;
            if (!ok) std::cout << "  [" << why << "]";
            std::cout << "\n";
        }
    }
    return all_ok ? kExitOk : kExitCheckFailed;
}

int cmd_tower(const std::string& path) {
    Model m = load_model(path);
    ValidationReport vr = validate_model(m);
    if (!vr.ok()) return print_violations(vr);
    OddTowerResult tower = odd_tower_check(m);
    std::cout << "stage  alpha                     ker  im   ker>im  factorable\n";
    for (const auto& s : tower.stages) {
        std::ostringstream alpha;
        alpha << "[" << serialize_element(s.alpha) << "]";
        std::cout << std::left << std::setw(7) << s.stage << std::setw(26) << alpha.str()
                  << std::setw(5) << s.ker_dim << std::setw(5) << s.im_dim << std::setw(8)
                  << (s.condition_ok ? "yes" : "no") << (s.c1_factorable ? "yes" : "no") << "\n";
    }
    TowerIdentity id = tower_dimension_identity(m, static_cast<int>(m.algebra().size()));
    std::cout << "dim H = " << id.dim_h_total << ", 2 dim ker = " << id.twice_ker
              << (id.equal ? " (equal)" : " (NOT equal)") << "\n";
    std::cout << (tower.all_ok ? "tower condition holds at every stage\n"
                               : "tower condition fails at some stage\n");
    return tower.all_ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact-arithmetic toolkit for minimal Sullivan algebras over Q: "
                 "cohomology, classification, and the Hilali inequality dim V <= dim H"};
    app.require_subcommand(1);

    std::string path, out_path, audit_path;
    int up_to = 0;
    int fd = 0;
    bool machine = false, run_all = false;

    auto* validate = app.add_subcommand("validate", "check a .sul model file");
    validate->add_option("file", path, "model file")->required();

    auto* cohomology = app.add_subcommand("cohomology", "Betti table and representatives");
    cohomology->add_option("file", path, "model file")->required();
    cohomology->add_option("--up-to", up_to, "top degree of the window");
    cohomology->add_flag("--machine", machine, "machine-readable output");
    cohomology->add_option("--out", out_path, "write the report to a file");

    auto* check = app.add_subcommand("check", "full Hilali verdict");
    check->add_option("file", path, "model file")->required();
    check->add_option("--up-to", up_to, "top degree of the window");
    check->add_flag("--machine", machine, "machine-readable output");
    check->add_option("--out", out_path, "write the report to a file");

    auto* enumerate = app.add_subcommand("enumerate", "admissible degree sequences for a formal dimension");
    enumerate->add_option("--fd", fd, "formal dimension")->required();
    enumerate->add_option("--audit", audit_path, "reference table to audit against");
    enumerate->add_option("--out", out_path, "write the rows to a file");

    auto* corpus = app.add_subcommand("corpus", "built-in model registry");
    corpus->add_flag("--run-all", run_all, "run the pipeline on every entry");
    corpus->add_flag("--machine", machine, "machine-readable output");

    auto* tower = app.add_subcommand("tower", "connecting-map tower of an odd-generated model");
    tower->add_option("file", path, "model file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(path);
        if (app.got_subcommand(cohomology)) return cmd_cohomology(path, up_to, machine, out_path);
        if (app.got_subcommand(check)) return cmd_check(path, up_to, machine, out_path);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(fd, audit_path, out_path);
        if (app.got_subcommand(corpus)) return cmd_corpus(run_all, machine);
        if (app.got_subcommand(tower)) return cmd_tower(path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
