// Copyright (c) gozinta contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line interface around the gozinta library: verify and draw
// nesting instances, search for achievable orders, certify
// impossibility claims, and run the constructive operations.
//
// Exit codes: 0 = ok / feasible / witness found; 1 = verification
// failure / infeasible / nothing found; 2 = usage or parse error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gozinta/gozinta.hpp"

namespace {

using namespace gozinta;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;

TrickInstance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::ParseError, "cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

void write_instance(const TrickInstance& w, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error(Errc::ParseError, "cannot write " + path);
    out << render(w);
}

void print_instance(const TrickInstance& w, bool with_diagrams) {
    std::cout << render(w);
    if (with_diagrams) std::cout << render_diagrams(w);
}

Dims parse_dims_list(const std::string& text) {
    std::vector<Scalar> sides;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t next = text.find(',', pos);
        if (next == std::string::npos) next = text.size();
        sides.push_back(Rational::from_string(text.substr(pos, next - pos)));
        pos = next + 1;
        if (pos > text.size()) break;
    }
    return make_dims(std::move(sides));
}

std::vector<Permutation> parse_perms(const std::vector<std::string>& specs, std::size_t boxes) {
    std::vector<Permutation> out;
    for (const auto& s : specs) out.push_back(Permutation::parse(s));
    if (out.empty()) out.push_back(Permutation::reverse(boxes));
    return out;
}

int emit_or_print(const TrickInstance& w, const std::string& emit_path, bool diagrams) {
    if (!emit_path.empty()) write_instance(w, emit_path);
    print_instance(w, diagrams);
    return kExitOk;
}

int run(int argc, char** argv) {
    CLI::App app{"exact-arithmetic toolkit for nesting-box tricks"};
    app.require_subcommand(1);

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check a file's arrangements");
    std::string verify_file;
    bool no_bound = false;
    verify_cmd->add_option("file", verify_file)->required();
    verify_cmd->add_flag("--no-bound", no_bound, "skip the expansion bound");

    // diagram
    auto* diagram_cmd = app.add_subcommand("diagram", "print stack diagrams");
    std::string diagram_file;
    diagram_cmd->add_option("file", diagram_file)->required();

    // classify
    auto* classify_cmd = app.add_subcommand("classify", "type of a mutually nesting 3D pair");
    std::string classify_a, classify_b;
    bool classify_bound = false;
    classify_cmd->add_option("a", classify_a, "first box, e.g. 6,8,10")->required();
    classify_cmd->add_option("b", classify_b, "second box, e.g. 7,9,11")->required();
    classify_cmd->add_flag("--bound", classify_bound, "require fits within the expansion bound");

    // achieve
    auto* achieve_cmd = app.add_subcommand("achieve", "search for a box set realizing orders");
    std::size_t achieve_dim = 3, achieve_boxes = 0;
    std::vector<std::string> achieve_perms;
    bool achieve_normalize = false;
    std::string achieve_emit;
    achieve_cmd->add_option("--dim", achieve_dim)->required();
    achieve_cmd->add_option("--boxes", achieve_boxes)->required();
    achieve_cmd->add_option("--perm", achieve_perms, "orders beside the natural one");
    achieve_cmd->add_flag("--normalize", achieve_normalize,
                          "restrict to the closed-once pattern (natural+reverse only)");
    achieve_cmd->add_option("--emit", achieve_emit, "write the bound-restored witness here");

    // impossible
    auto* imp_cmd = app.add_subcommand("impossible", "exhaust every case of a search space");
    std::size_t imp_dim = 3, imp_boxes = 0;
    std::vector<std::string> imp_perms;
    imp_cmd->add_option("--dim", imp_dim)->required();
    imp_cmd->add_option("--boxes", imp_boxes)->required();
    imp_cmd->add_option("--perm", imp_perms, "orders beside the natural one (default: reverse)");

    // brute
    auto* brute_cmd = app.add_subcommand("brute", "bounded integer search");
    std::size_t brute_dim = 3, brute_boxes = 0;
    int brute_max = 0;
    std::uint64_t brute_budget = 0;
    std::vector<std::string> brute_perms;
    brute_cmd->add_option("--dim", brute_dim)->required();
    brute_cmd->add_option("--boxes", brute_boxes)->required();
    brute_cmd->add_option("--max-side", brute_max)->required();
    brute_cmd->add_option("--perm", brute_perms, "orders beside the natural one (default: reverse)");
    brute_cmd->add_option("--budget", brute_budget, "stop after this many configurations");

    // boost
    auto* boost_cmd = app.add_subcommand("boost", "build larger witnesses from smaller ones");
    auto* concat_cmd = boost_cmd->add_subcommand("concat", "stack one witness inside another");
    std::string concat_a, concat_b, concat_emit;
    concat_cmd->add_option("inner", concat_a)->required();
    concat_cmd->add_option("outer", concat_b)->required();
    concat_cmd->add_option("--emit", concat_emit);
    auto* dup_cmd = boost_cmd->add_subcommand("dup", "duplicate one box slightly inflated");
    std::string dup_file, dup_emit;
    std::size_t dup_element = 0;
    dup_cmd->add_option("file", dup_file)->required();
    dup_cmd->add_option("element", dup_element, "natural position of the box to copy")
        ->required();
    dup_cmd->add_option("--emit", dup_emit);
    auto* inv_cmd = boost_cmd->add_subcommand("inv", "realize the inverse order");
    std::string inv_file, inv_emit;
    inv_cmd->add_option("file", inv_file)->required();
    inv_cmd->add_option("--emit", inv_emit);
    boost_cmd->require_subcommand(1);

    // reduce
    auto* reduce_cmd = app.add_subcommand("reduce", "drop the largest side of every box");
    std::string reduce_file, reduce_emit;
    reduce_cmd->add_option("file", reduce_file)->required();
    reduce_cmd->add_option("--emit", reduce_emit);

    // transform
    auto* tr_cmd = app.add_subcommand("transform", "rescale, shift or edit a verified set");
    auto* scale_cmd = tr_cmd->add_subcommand("scale", "multiply all sides by a constant");
    std::string scale_file, scale_c, scale_emit;
    scale_cmd->add_option("file", scale_file)->required();
    scale_cmd->add_option("factor", scale_c)->required();
    scale_cmd->add_option("--emit", scale_emit);
    auto* shift_cmd = tr_cmd->add_subcommand("shift", "add a constant to all sides");
    std::string shift_file, shift_c, shift_emit;
    shift_cmd->add_option("file", shift_file)->required();
    shift_cmd->add_option("constant", shift_c)->required();
    shift_cmd->add_option("--emit", shift_emit);
    auto* replace_cmd = tr_cmd->add_subcommand("replace", "move one side inside its gap");
    std::string replace_file, replace_label, replace_value, replace_emit;
    std::size_t replace_index = 0;
    replace_cmd->add_option("file", replace_file)->required();
    replace_cmd->add_option("label", replace_label)->required();
    replace_cmd->add_option("side", replace_index, "1-based sorted side index")->required();
    replace_cmd->add_option("value", replace_value)->required();
    replace_cmd->add_option("--emit", replace_emit);
    auto* restore_cmd = tr_cmd->add_subcommand("restore", "shift until the bound holds");
    std::string restore_file, restore_emit;
    restore_cmd->add_option("file", restore_file)->required();
    restore_cmd->add_option("--emit", restore_emit);
    tr_cmd->require_subcommand(1);

    // gen-triple
    auto* gen_cmd = app.add_subcommand("gen-triple", "three boxes for any dimension");
    std::size_t gen_n = 0;
    std::string gen_emit;
    gen_cmd->add_option("dimension", gen_n)->required();
    gen_cmd->add_option("--emit", gen_emit);

    // catalog
    auto* cat_cmd = app.add_subcommand("catalog", "list or print the worked configurations");
    std::string cat_name;
    bool cat_diagram = false;
    cat_cmd->add_option("name", cat_name);
    cat_cmd->add_flag("--diagram", cat_diagram, "print stack diagrams instead of the file form");

    // coolness
    auto* cool_cmd = app.add_subcommand("coolness", "inversions of a permutation");
    std::string cool_perm;
    cool_cmd->add_option("perm", cool_perm)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help or the usage message
        return e.get_name() == "CallForHelp" ? kExitOk : kExitUsage;
    }

    if (*verify_cmd) {
        TrickInstance w = load_instance(verify_file);
        w.enforce_bound = !no_bound;
        std::cout << render_diagrams(w);
        VerifyReport report = verify_trick(w);
        if (report.ok) {
            std::cout << "OK\n";
            return kExitOk;
        }
        std::cout << report.summary();
        return kExitNegative;
    }
    if (*diagram_cmd) {
        std::cout << render_diagrams(load_instance(diagram_file));
        return kExitOk;
    }
    if (*classify_cmd) {
        PairType t = classify_pair(parse_dims_list(classify_a), parse_dims_list(classify_b),
                                   classify_bound);
        std::cout << "Type " << t.type_id << ": " << t.chain_string();
        if (t.swapped) std::cout << " (boxes swapped so a has the smaller smallest side)";
        std::cout << "\n";
        return kExitOk;
    }
    if (*achieve_cmd) {
        PermSpec spec = PermSpec::make(achieve_boxes, achieve_dim,
                                       parse_perms(achieve_perms, achieve_boxes));
        SearchResult result = jointly_achievable(spec, achieve_normalize);
        if (!result.found) {
            std::cout << "ProvedInfeasible (cases checked: " << result.cases_checked << ")\n";
            return kExitNegative;
        }
        VerifyReport raw_check = verify_trick(result.witness);
        TrickInstance bounded = restore_expansion_bound(result.witness);
        VerifyReport bounded_check = verify_trick(bounded);
        if (!raw_check.ok || !bounded_check.ok) {
            std::cerr << "internal error: witness failed re-verification\n";
            return kExitNegative;
        }
        std::cout << "Witness (case " << result.case_index << " of "
                  << case_count(spec, achieve_normalize) << ")\n";
        print_instance(result.witness, true);
        if (!achieve_emit.empty()) write_instance(bounded, achieve_emit);
        return kExitOk;
    }
    if (*imp_cmd) {
        auto report = verify_impossibility(imp_boxes, imp_dim, parse_perms(imp_perms, imp_boxes));
        std::cout << "cases_total=" << report.cases_total
                  << " feasible_cases=" << report.feasible_cases << " all_infeasible="
                  << (report.all_infeasible ? "true" : "false") << "\n";
        return report.all_infeasible ? kExitOk : kExitNegative;
    }
    if (*brute_cmd) {
        std::optional<std::uint64_t> budget;
        if (brute_budget > 0) budget = brute_budget;
        BruteResult result = brute_force_search(brute_boxes, brute_dim, brute_max,
                                                parse_perms(brute_perms, brute_boxes), budget);
        std::cout << "configs tested: " << result.configs_tested << "\n";
        if (result.status == BruteResult::Status::BudgetExceeded) {
            std::cout << "BudgetExceeded\n";
            return kExitNegative;
        }
        if (result.status == BruteResult::Status::NotFound) {
            std::cout << "none found\n";
            return kExitNegative;
        }
        print_instance(*result.instance, true);
        return kExitOk;
    }
    if (*concat_cmd)
        return emit_or_print(boost_concat(load_instance(concat_a), load_instance(concat_b)),
                             concat_emit, true);
    if (*dup_cmd)
        return emit_or_print(boost_duplicate(load_instance(dup_file), dup_element), dup_emit,
                             true);
    if (*inv_cmd) return emit_or_print(boost_inverse(load_instance(inv_file)), inv_emit, true);
    if (*reduce_cmd)
        return emit_or_print(reduce_dimension(load_instance(reduce_file)), reduce_emit, true);
    if (*scale_cmd)
        return emit_or_print(scale(load_instance(scale_file), Rational::from_string(scale_c)),
                             scale_emit, false);
    if (*shift_cmd)
        return emit_or_print(shift(load_instance(shift_file), Rational::from_string(shift_c)),
                             shift_emit, false);
    if (*replace_cmd)
        return emit_or_print(replace_gap_side(load_instance(replace_file), replace_label,
                                              replace_index,
                                              Rational::from_string(replace_value)),
                             replace_emit, false);
    if (*restore_cmd)
        return emit_or_print(restore_expansion_bound(load_instance(restore_file)), restore_emit,
                             false);
    if (*gen_cmd) return emit_or_print(gen_triple(gen_n), gen_emit, true);
    if (*cat_cmd) {
        if (cat_name.empty()) {
            for (const auto& [name, entry] : catalog())
                std::cout << name << " — " << entry.note << "\n";
            return kExitOk;
        }
        auto it = catalog().find(cat_name);
        if (it == catalog().end()) {
            std::cerr << "no catalog entry named " << cat_name << "\n";
            return kExitUsage;
        }
        if (cat_diagram) std::cout << render_diagrams(it->second.instance);
        else std::cout << render(it->second.instance);
        return kExitOk;
    }
    if (*cool_cmd) {
        std::cout << inversions(Permutation::parse(cool_perm)) << "\n";
        return kExitOk;
    }
    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const gozinta::Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.code()) {
            case gozinta::Errc::ParseError:
            case gozinta::Errc::DuplicateLabel:
            case gozinta::Errc::UnknownLabel:
                return kExitUsage;
            default:
                return kExitNegative;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
}
