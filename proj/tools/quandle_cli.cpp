// quandle: file-based front end for the quandlekit library.
//
// Exit codes: 0 success / affirmative verdict, 1 unreadable or structurally
// malformed input (parse errors, caps, bad parameters), 2 well-formed input
// with a negative verdict (not a quandle, not a group, not Alexander).
//
// All output is deterministic for a given input; --timing adds wall-clock
// fields and is therefore the one flag that breaks byte-stability.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "quandlekit/quandlekit.hpp"

namespace qk = quandlekit;
using ordered_json = nlohmann::ordered_json;

namespace {

struct Options {
    bool json = false;
    bool trace = false;
    bool quiet = false;
    bool timing = false;
    int max_size = 0;  // 0 = flag absent
};

class Timer {
public:
    double elapsed_ms() const {
        const auto dt = std::chrono::steady_clock::now() - start_;
        return std::chrono::duration<double, std::milli>(dt).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void emit(const Options& opt, const std::string& text) {
    if (!opt.quiet) std::cout << text;
}

void emit_json(const Options& opt, const ordered_json& doc) {
    if (!opt.quiet) std::cout << doc.dump(2) << '\n';
}

int fail(const std::string& message, int code) {
    std::cerr << "error: " << message << '\n';
    return code;
}

// ---- rendering helpers ----

std::string render_table(const qk::Table& t, const std::string& indent) {
    const int width = static_cast<int>(std::to_string(t.order()).size());
    std::string out;
    for (int i = 1; i <= t.order(); ++i) {
        out += indent;
        for (int j = 1; j <= t.order(); ++j) {
            if (j > 1) out += ' ';
            const std::string cell = std::to_string(t.at(i, j));
            out.append(static_cast<std::size_t>(width) - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

std::string render_classes(const std::vector<std::vector<int>>& classes) {
    std::string out;
    for (const auto& cls : classes) {
        if (!out.empty()) out += ' ';
        out += '{';
        for (std::size_t i = 0; i < cls.size(); ++i) {
            if (i > 0) out += ',';
            out += std::to_string(cls[i]);
        }
        out += '}';
    }
    return out;
}

ordered_json json_matrix(const qk::Table& t) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : t.rows()) rows.push_back(row);
    return rows;
}

ordered_json json_witness(const std::string& check, const std::vector<int>& indices,
                          const std::string& message) {
    return ordered_json{{"check", check}, {"indices", indices}, {"message", message}};
}

ordered_json json_obstruction(const qk::ObstructionVerdict& verdict, bool with_steps) {
    ordered_json doc;
    doc["status"] = qk::to_string(verdict.status);
    doc["element_classes"] = verdict.trace.element_classes;
    doc["scaled_classes"] = verdict.trace.scaled_classes;
    if (with_steps) {
        ordered_json steps = ordered_json::array();
        for (const auto& s : verdict.trace.steps) {
            steps.push_back(ordered_json{
                {"rule", qk::rule_name(s.rule)},
                {"partition", s.target == qk::PartitionId::Element ? "element" : "scaled"},
                {"premises", s.premises},
                {"merged", std::vector<int>{s.merged_a, s.merged_b}},
            });
        }
        doc["steps"] = steps;
    }
    return doc;
}

ordered_json json_presentations(const std::vector<qk::AlexanderPresentation>& ps) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : ps)
        arr.push_back(ordered_json{{"cayley", json_matrix(p.cayley.table())},
                                   {"phi", p.phi.image()}});
    return arr;
}

std::string medial_message(const std::vector<int>& w) {
    return "medial law fails at a=" + std::to_string(w[0]) + " b=" + std::to_string(w[1]) +
           " c=" + std::to_string(w[2]) + " d=" + std::to_string(w[3]);
}

ordered_json search_witnesses(const qk::SearchOutcome& outcome) {
    ordered_json arr = ordered_json::array();
    if (outcome.status == qk::SearchStatus::NotAbelian)
        arr.push_back(json_witness("medial", outcome.abelian_witness,
                                   medial_message(outcome.abelian_witness)));
    if (outcome.status == qk::SearchStatus::Contradiction && outcome.contradiction)
        arr.push_back(json_witness(qk::rule_name(outcome.contradiction->rule),
                                   {outcome.contradiction->row, outcome.contradiction->col},
                                   outcome.contradiction->message()));
    return arr;
}

// ---- input helpers ----

// Reads and axiom-checks a quandle file. On failure prints the reason and
// stores the exit code.
std::optional<qk::QuandleMatrix> load_quandle(const std::string& path, const Options& opt,
                                              int& code) {
    qk::Table t;
    try {
        t = qk::read_matrix_file(path);
    } catch (const std::exception& e) {
        code = fail(e.what(), 1);
        return std::nullopt;
    }
    auto checked = qk::validate_quandle(std::move(t));
    if (!checked) {
        if (opt.json) {
            const auto& v = checked.violation();
            ordered_json doc;
            doc["status"] = "not-a-quandle";
            doc["witnesses"] = ordered_json::array(
                {json_witness(qk::rule_name(v.rule), v.witness, v.message)});
            emit_json(opt, doc);
        } else {
            emit(opt, "not a quandle: " + checked.violation().message + "\n");
        }
        code = 2;
        return std::nullopt;
    }
    if (opt.max_size > 0 && checked.value().order() > opt.max_size) {
        code = fail("order " + std::to_string(checked.value().order()) + " exceeds --max-size " +
                        std::to_string(opt.max_size),
                    1);
        return std::nullopt;
    }
    return std::move(checked).value();
}

std::optional<qk::CayleyMatrix> load_group(const std::string& path, bool abelian,
                                           const Options& opt, int& code) {
    qk::Table t;
    try {
        t = qk::read_matrix_file(path);
    } catch (const std::exception& e) {
        code = fail(e.what(), 1);
        return std::nullopt;
    }
    auto checked = abelian ? qk::validate_abelian_group(std::move(t))
                           : qk::validate_group(std::move(t));
    if (!checked) {
        emit(opt, "not a " + std::string(abelian ? "commutative " : "") + "group: " +
                      checked.violation().message + "\n");
        code = 2;
        return std::nullopt;
    }
    return std::move(checked).value();
}

int write_matrix_output(const qk::Table& t, const std::string& out_path, const Options& opt,
                        const char* what) {
    if (out_path == "-") {
        std::cout << qk::format_matrix(t);
        return 0;
    }
    try {
        qk::write_matrix_file(out_path, t);
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
    if (opt.json) {
        ordered_json doc;
        doc["status"] = "ok";
        doc["kind"] = what;
        doc["order"] = t.order();
        doc["path"] = out_path;
        doc["matrix"] = json_matrix(t);
        emit_json(opt, doc);
    } else {
        emit(opt, std::string("wrote ") + what + " of order " + std::to_string(t.order()) +
                      " to " + out_path + "\n");
    }
    return 0;
}

// ---- commands ----

int run_validate(const std::string& path, const Options& opt) {
    qk::Table t;
    try {
        t = qk::read_matrix_file(path);
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
    const int order = t.order();
    auto checked = qk::validate_quandle(std::move(t));
    if (opt.json) {
        ordered_json doc;
        doc["status"] = checked ? "valid" : "invalid";
        doc["order"] = order;
        doc["witnesses"] = ordered_json::array();
        if (!checked) {
            const auto& v = checked.violation();
            doc["witnesses"].push_back(json_witness(qk::rule_name(v.rule), v.witness, v.message));
        }
        emit_json(opt, doc);
    } else if (checked) {
        emit(opt, "valid quandle of order " + std::to_string(order) + "\n");
    } else {
        emit(opt, "not a quandle: " + checked.violation().message + "\n");
    }
    return checked ? 0 : 2;
}

int run_classify(const std::string& path, const Options& opt) {
    int code = 0;
    const auto q = load_quandle(path, opt, code);
    if (!q) return code;

    const Timer timer;
    const qk::CheckResult medial = qk::is_abelian(*q);
    const qk::CheckResult left_dist = qk::is_left_distributive(*q);
    const qk::ObstructionVerdict verdict = qk::obstruction_check(*q);
    const qk::SearchOutcome outcome = qk::alexander_presentations(*q);
    const double ms = timer.elapsed_ms();

    if (opt.json) {
        ordered_json doc;
        doc["status"] = qk::to_string(outcome.status);
        doc["order"] = q->order();
        doc["source"] = json_matrix(q->table());
        doc["abelian"] = medial.ok;
        doc["left_distributive"] = left_dist.ok;
        doc["obstruction"] = json_obstruction(verdict, opt.trace);
        doc["presentations"] = json_presentations(outcome.presentations);
        doc["witnesses"] = search_witnesses(outcome);
        if (opt.timing) doc["timing"] = ordered_json{{"milliseconds", ms}};
        emit_json(opt, doc);
    } else {
        std::string out = "order: " + std::to_string(q->order()) + "\n";
        out += "abelian: " + std::string(medial.ok ? "yes" : "no");
        if (!medial.ok) out += " (" + medial_message(medial.witness) + ")";
        out += "\n";
        out += "left-distributive: " + std::string(left_dist.ok ? "yes" : "no");
        if (!left_dist.ok)
            out += " (witness a=" + std::to_string(left_dist.witness[0]) +
                   " b=" + std::to_string(left_dist.witness[1]) +
                   " c=" + std::to_string(left_dist.witness[2]) + ")";
        out += "\n";
        out += "obstruction: " + std::string(qk::to_string(verdict.status)) + "\n";
        if (opt.trace) {
            std::string listing = qk::explain_trace(verdict.trace);
            out += "  ";
            for (const char c : listing) {
                out += c;
                if (c == '\n') out += "  ";
            }
            out += "\n";
            out += "  element classes: " + render_classes(verdict.trace.element_classes) + "\n";
            out += "  scaled classes: " + render_classes(verdict.trace.scaled_classes) + "\n";
        }
        if (outcome.success()) {
            const auto count = outcome.presentations.size();
            out += "alexander: yes (" + std::to_string(count) + " presentation" +
                   (count == 1 ? "" : "s") + ")\n";
        } else {
            out += "alexander: no (";
            switch (outcome.status) {
                case qk::SearchStatus::NotAbelian: out += "not abelian"; break;
                case qk::SearchStatus::Contradiction:
                    out += "constraint contradiction: " + outcome.contradiction->message();
                    break;
                case qk::SearchStatus::NoValidGroup: out += "no compatible group table"; break;
                case qk::SearchStatus::Success: break;
            }
            out += ")\n";
        }
        emit(opt, out);
        if (opt.timing) std::cerr << "timing: " << ms << " ms\n";
    }
    return outcome.success() ? 0 : 2;
}

int run_presentations(const std::string& path, const Options& opt) {
    int code = 0;
    const auto q = load_quandle(path, opt, code);
    if (!q) return code;

    const Timer timer;
    const qk::SearchOutcome outcome = qk::alexander_presentations(*q);
    const qk::ObstructionVerdict verdict = qk::obstruction_check(*q);
    const double ms = timer.elapsed_ms();

    if (opt.json) {
        ordered_json doc;
        doc["status"] = qk::to_string(outcome.status);
        doc["order"] = q->order();
        doc["source"] = json_matrix(q->table());
        doc["presentations"] = json_presentations(outcome.presentations);
        doc["obstruction"] = json_obstruction(verdict, opt.trace);
        doc["witnesses"] = search_witnesses(outcome);
        if (opt.timing) doc["timing"] = ordered_json{{"milliseconds", ms}};
        emit_json(opt, doc);
    } else {
        std::string out = "status: " + std::string(qk::to_string(outcome.status)) + "\n";
        if (outcome.status == qk::SearchStatus::NotAbelian)
            out += "reason: " + medial_message(outcome.abelian_witness) + "\n";
        if (outcome.status == qk::SearchStatus::Contradiction)
            out += "reason: " + outcome.contradiction->message() + "\n";
        out += "presentations: " + std::to_string(outcome.presentations.size()) + "\n";
        for (std::size_t i = 0; i < outcome.presentations.size(); ++i) {
            const auto& p = outcome.presentations[i];
            out += "presentation " + std::to_string(i + 1) + "\n";
            out += "cayley:\n" + render_table(p.cayley.table(), "  ");
            out += "phi:";
            for (const int v : p.phi.image()) out += ' ' + std::to_string(v);
            out += "\n";
        }
        emit(opt, out);
        if (opt.timing) std::cerr << "timing: " << ms << " ms\n";
    }
    return outcome.success() ? 0 : 2;
}

int run_generate_trivial(int n, const std::string& out, const Options& opt) {
    try {
        return write_matrix_output(qk::trivial_quandle(n).table(), out, opt, "trivial quandle");
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
}

int run_generate_dihedral(int n, const std::string& out, const Options& opt) {
    try {
        return write_matrix_output(qk::dihedral_quandle(n).table(), out, opt,
                                   "dihedral quandle");
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
}

int run_generate_conj(const std::string& group_path, const std::string& out,
                      const Options& opt) {
    int code = 0;
    const auto g = load_group(group_path, false, opt, code);
    if (!g) return code;
    return write_matrix_output(qk::conj_quandle(*g).table(), out, opt, "conjugation quandle");
}

int run_generate_alexander(const std::string& cayley_path, const std::string& phi_path,
                           const std::string& out, const Options& opt) {
    int code = 0;
    const auto c = load_group(cayley_path, true, opt, code);
    if (!c) return code;

    std::vector<int> image;
    try {
        image = qk::read_vector_file(phi_path);
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
    auto phi = qk::PermutationVector::from_image(std::move(image));
    if (!phi) {
        emit(opt, "not a permutation: " + phi.violation().message + "\n");
        return 2;
    }
    if (phi.value().order() != c->order()) {
        emit(opt, "phi has " + std::to_string(phi.value().order()) + " entries, group has " +
                      std::to_string(c->order()) + "\n");
        return 2;
    }
    if (!qk::is_group_automorphism(phi.value(), *c)) {
        emit(opt, "phi is not an automorphism of the group table\n");
        return 2;
    }
    return write_matrix_output(qk::alexander_quandle(*c, phi.value()).table(), out, opt,
                               "alexander quandle");
}

int run_group_cyclic(int n, const std::string& out, const Options& opt) {
    try {
        return write_matrix_output(qk::cyclic_group(n).table(), out, opt, "cyclic group");
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
}

int run_group_product(const std::string& path_a, const std::string& path_b,
                      const std::string& out, const Options& opt) {
    int code = 0;
    const auto a = load_group(path_a, false, opt, code);
    if (!a) return code;
    const auto b = load_group(path_b, false, opt, code);
    if (!b) return code;
    return write_matrix_output(qk::direct_product(*a, *b).table(), out, opt, "direct product");
}

int run_group_auts(const std::string& path, const Options& opt) {
    int code = 0;
    const auto c = load_group(path, false, opt, code);
    if (!c) return code;

    std::vector<qk::PermutationVector> auts;
    try {
        auts = opt.max_size > 0 ? qk::automorphism_group(*c, opt.max_size)
                                : qk::automorphism_group(*c);
    } catch (const qk::CapExceeded& e) {
        return fail(e.what(), 1);
    }
    if (opt.json) {
        ordered_json doc;
        doc["status"] = "ok";
        doc["order"] = c->order();
        doc["count"] = auts.size();
        ordered_json arr = ordered_json::array();
        for (const auto& a : auts) arr.push_back(a.image());
        doc["automorphisms"] = arr;
        emit_json(opt, doc);
    } else {
        std::string out;
        for (const auto& a : auts) out += qk::format_vector(a.image());
        emit(opt, out);
    }
    return 0;
}

int run_group_validate(const std::string& path, const Options& opt) {
    qk::Table t;
    try {
        t = qk::read_matrix_file(path);
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
    const int order = t.order();
    auto checked = qk::validate_group(std::move(t));
    if (opt.json) {
        ordered_json doc;
        doc["status"] = checked ? "valid" : "invalid";
        doc["order"] = order;
        if (checked) doc["commutative"] = checked.value().commutative();
        doc["witnesses"] = ordered_json::array();
        if (!checked) {
            const auto& v = checked.violation();
            doc["witnesses"].push_back(json_witness(qk::rule_name(v.rule), v.witness, v.message));
        }
        emit_json(opt, doc);
    } else if (checked) {
        emit(opt, std::string("valid group (") +
                      (checked.value().commutative() ? "commutative" : "non-commutative") +
                      ")\n");
    } else {
        emit(opt, "not a group: " + checked.violation().message + "\n");
    }
    return checked ? 0 : 2;
}

int run_enumerate(int n, const Options& opt) {
    int cap = qk::kEnumerationCap;
    if (opt.max_size > 0 && opt.max_size < cap) cap = opt.max_size;
    if (n < 1) return fail("order must be positive", 1);
    if (n > cap)
        return fail("order " + std::to_string(n) + " exceeds enumeration cap " +
                        std::to_string(cap),
                    1);

    const auto quandles = qk::enumerate_quandles(n);
    std::size_t abelian_count = 0;
    std::size_t alexander_count = 0;
    ordered_json arr = ordered_json::array();
    std::string text = "order: " + std::to_string(n) + "\n";
    for (std::size_t i = 0; i < quandles.size(); ++i) {
        const auto& q = quandles[i];
        const bool abelian = static_cast<bool>(qk::is_abelian(q));
        const bool alexander = qk::alexander_presentations(q).success();
        abelian_count += abelian ? 1 : 0;
        alexander_count += alexander ? 1 : 0;
        if (opt.json) {
            arr.push_back(ordered_json{{"matrix", json_matrix(q.table())},
                                       {"abelian", abelian},
                                       {"alexander", alexander}});
        } else {
            text += "# " + std::to_string(i + 1) + "\n";
            text += render_table(q.table(), "");
            text += std::string("abelian: ") + (abelian ? "yes" : "no") +
                    "  alexander: " + (alexander ? "yes" : "no") + "\n";
        }
    }
    if (opt.json) {
        ordered_json doc;
        doc["status"] = "ok";
        doc["order"] = n;
        doc["count"] = quandles.size();
        doc["abelian_count"] = abelian_count;
        doc["alexander_count"] = alexander_count;
        doc["quandles"] = arr;
        emit_json(opt, doc);
    } else {
        text += "total: " + std::to_string(quandles.size()) +
                "  abelian: " + std::to_string(abelian_count) +
                "  alexander: " + std::to_string(alexander_count) + "\n";
        emit(opt, text);
    }
    return 0;
}

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_flag("--json", opt.json, "machine-readable output");
    cmd->add_flag("--trace", opt.trace, "include the obstruction derivation");
    cmd->add_flag("--quiet", opt.quiet, "suppress stdout; rely on the exit code");
    cmd->add_flag("--timing", opt.timing, "report wall-clock time (breaks byte-stability)");
    cmd->add_option("--max-size", opt.max_size, "size cap for searches and enumeration")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite quandle toolkit: validation, classification, Alexander presentations"};
    app.require_subcommand(1);
    Options opt;

    std::string path, path_b, out_path;
    int order = 0;

    auto* validate = app.add_subcommand("validate", "check the quandle axioms of a matrix file");
    validate->add_option("file", path, "matrix file")->required();
    add_common_flags(validate, opt);

    auto* classify =
        app.add_subcommand("classify", "abelian / left-distributive / obstruction / Alexander");
    classify->add_option("file", path, "matrix file")->required();
    add_common_flags(classify, opt);

    auto* presentations =
        app.add_subcommand("presentations", "all Alexander presentations of a quandle");
    presentations->add_option("file", path, "matrix file")->required();
    add_common_flags(presentations, opt);

    auto* generate = app.add_subcommand("generate", "construct quandle matrices");
    generate->require_subcommand(1);
    auto* gen_trivial = generate->add_subcommand("trivial", "trivial quandle of order n");
    gen_trivial->add_option("n", order, "order")->required();
    gen_trivial->add_option("out", out_path, "output path or -")->required();
    add_common_flags(gen_trivial, opt);
    auto* gen_dihedral = generate->add_subcommand("dihedral", "dihedral quandle of order n");
    gen_dihedral->add_option("n", order, "order")->required();
    gen_dihedral->add_option("out", out_path, "output path or -")->required();
    add_common_flags(gen_dihedral, opt);
    auto* gen_conj = generate->add_subcommand("conj", "conjugation quandle of a group table");
    gen_conj->add_option("group", path, "group matrix file")->required();
    gen_conj->add_option("out", out_path, "output path or -")->required();
    add_common_flags(gen_conj, opt);
    auto* gen_alex =
        generate->add_subcommand("alexander", "Alexander quandle from a table and phi");
    gen_alex->add_option("cayley", path, "commutative group matrix file")->required();
    gen_alex->add_option("phi", path_b, "automorphism file: one line of n images")->required();
    gen_alex->add_option("out", out_path, "output path or -")->required();
    add_common_flags(gen_alex, opt);

    auto* group = app.add_subcommand("group", "group-table utilities");
    group->require_subcommand(1);
    auto* grp_cyclic = group->add_subcommand("cyclic", "cyclic group table of order n");
    grp_cyclic->add_option("n", order, "order")->required();
    grp_cyclic->add_option("out", out_path, "output path or -")->default_val("-");
    add_common_flags(grp_cyclic, opt);
    auto* grp_product = group->add_subcommand("product", "direct product of two group tables");
    grp_product->add_option("a", path, "first group matrix file")->required();
    grp_product->add_option("b", path_b, "second group matrix file")->required();
    grp_product->add_option("out", out_path, "output path or -")->default_val("-");
    add_common_flags(grp_product, opt);
    auto* grp_auts = group->add_subcommand("auts", "automorphism list of a group table");
    grp_auts->add_option("file", path, "group matrix file")->required();
    add_common_flags(grp_auts, opt);
    auto* grp_validate = group->add_subcommand("validate", "check the group axioms");
    grp_validate->add_option("file", path, "matrix file")->required();
    add_common_flags(grp_validate, opt);

    auto* enumerate =
        app.add_subcommand("enumerate", "all labeled quandles of order n (n <= 5)");
    enumerate->add_option("n", order, "order")->required();
    add_common_flags(enumerate, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (validate->parsed()) return run_validate(path, opt);
        if (classify->parsed()) return run_classify(path, opt);
        if (presentations->parsed()) return run_presentations(path, opt);
        if (gen_trivial->parsed()) return run_generate_trivial(order, out_path, opt);
        if (gen_dihedral->parsed()) return run_generate_dihedral(order, out_path, opt);
        if (gen_conj->parsed()) return run_generate_conj(path, out_path, opt);
        if (gen_alex->parsed()) return run_generate_alexander(path, path_b, out_path, opt);
        if (grp_cyclic->parsed()) return run_group_cyclic(order, out_path, opt);
        if (grp_product->parsed()) return run_group_product(path, path_b, out_path, opt);
        if (grp_auts->parsed()) return run_group_auts(path, opt);
        if (grp_validate->parsed()) return run_group_validate(path, opt);
        if (enumerate->parsed()) return run_enumerate(order, opt);
    } catch (const std::exception& e) {
        return fail(e.what(), 1);
    }
    return 1;
}
