// nsgap: numerical semigroup gap-distribution queries from the command line.
//
// Subcommands: info, apery, gaps, ed, ed-all, classify, verify.
// Semigroups are given either as an explicit generator list (--gens) or via a
// family shorthand (--two, --genarith, --arith); shorthands expand to a
// generator list first, so every path goes through the same construction and
// validation. Output is JSON (default) or TSV and is byte-identical across
// runs of the same invocation; timing goes to stderr.
//
// Exit codes: 0 success, 1 domain error, 2 usage error, 3 sweep mismatch.

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "nsgap/criteria.hpp"
#include "nsgap/semigroup.hpp"
#include "nsgap/verify.hpp"

using nlohmann::ordered_json;
using namespace nsgap;

namespace {

constexpr std::size_t kMaxListedEntries = 10000;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<Int> build_gen_arith_gens(Int a, Int h, Int d) {
    if (a < 1 || h < 1 || d < 1) {
        throw BadParametersError("family parameters must be positive integers");
    }
    std::vector<Int> gens{a};
    for (Int i = 1; i < a; ++i) {
        gens.push_back(checked_add(checked_mul(h, a), checked_mul(i, d)));
    }
    return gens;
}

// One semigroup source per invocation: an explicit generator list or a
// family shorthand expanded to one.
struct GeneratorArgs {
    std::vector<Int> gens;
    std::vector<Int> two;
    std::vector<Int> genarith;
    std::vector<Int> arith;

    void attach(CLI::App* cmd) {
        auto* grp = cmd->add_option_group("semigroup");
        grp->add_option("--gens", gens, "comma-separated generator list")->delimiter(',');
        grp->add_option("--two", two, "a,b: the semigroup <a,b>")->delimiter(',');
        grp->add_option("--genarith", genarith, "a,h,d: <a, ha+d, ha+2d, ..., ha+(a-1)d>")
            ->delimiter(',');
        grp->add_option("--arith", arith, "a,d: <a, a+d, ..., a+(a-1)d>")->delimiter(',');
        grp->require_option(1);
    }

    std::vector<Int> build() const {
        if (!gens.empty()) return gens;
        if (!two.empty()) {
            if (two.size() != 2) throw UsageError("--two expects exactly two values: a,b");
            return two;
        }
        if (!genarith.empty()) {
            if (genarith.size() != 3) throw UsageError("--genarith expects three values: a,h,d");
            return build_gen_arith_gens(genarith[0], genarith[1], genarith[2]);
        }
        if (arith.size() != 2) throw UsageError("--arith expects exactly two values: a,d");
        return build_gen_arith_gens(arith[0], 1, arith[1]);
    }
};

std::string join(const std::vector<Int>& values, const char* sep = ",") {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i) out << (i ? sep : "") << values[i];
    return out.str();
}

void emit_json(const ordered_json& j) { std::cout << j.dump() << "\n"; }

void cmd_info(const NumericalSemigroup& s, bool tsv) {
    if (tsv) {
        std::cout << "generators\tmultiplicity\tembedding_dimension\tfrobenius\tgenus\t"
                     "max_embedding_dimension\n";
        std::cout << join(s.minimal_generators()) << '\t' << s.multiplicity() << '\t'
                  << s.embedding_dimension() << '\t' << s.frobenius() << '\t' << s.genus() << '\t'
                  << (s.is_maximal_embedding_dimension() ? "true" : "false") << "\n";
        return;
    }
    ordered_json j;
    j["generators"] = s.minimal_generators();
    j["multiplicity"] = s.multiplicity();
    j["embedding_dimension"] = s.embedding_dimension();
    j["frobenius"] = s.frobenius();
    j["genus"] = s.genus();
    j["max_embedding_dimension"] = s.is_maximal_embedding_dimension();
    emit_json(j);
}

void cmd_apery(const NumericalSemigroup& s, Int rel, bool tsv) {
    AperySet ap = s.apery_set(rel);
    if (tsv) {
        std::cout << "residue\telement\n";
        for (Int r = 0; r < ap.relative_to; ++r) {
            std::cout << r << '\t' << ap.elements[static_cast<std::size_t>(r)] << "\n";
        }
        return;
    }
    ordered_json j;
    j["relative_to"] = ap.relative_to;
    j["elements"] = ap.sorted();
    emit_json(j);
}

void cmd_gaps(const NumericalSemigroup& s, bool tsv) {
    const std::vector<Int>& gaps = s.gaps();
    bool truncated = gaps.size() > kMaxListedEntries;
    std::size_t shown = truncated ? kMaxListedEntries : gaps.size();
    if (tsv) {
        std::cout << "gap\n";
        for (std::size_t i = 0; i < shown; ++i) std::cout << gaps[i] << "\n";
        if (truncated) {
            std::cout << "# truncated: showing " << shown << " of " << gaps.size() << "\n";
        }
        return;
    }
    ordered_json j;
    j["genus"] = s.genus();
    j["gaps"] = std::vector<Int>(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(shown));
    if (truncated) {
        j["truncated"] = true;
        j["shown"] = shown;
    }
    emit_json(j);
}

void cmd_ed(const NumericalSemigroup& s, Int m, bool tsv) {
    EDReport report = ed_direct(s, m);
    if (tsv) {
        std::cout << "m\tevenly_distributed\troute\twitness_r1\twitness_r2\n";
        std::cout << report.modulus << '\t' << (report.evenly_distributed ? "true" : "false")
                  << '\t' << to_string(report.route) << '\t';
        if (report.unequal_residues) {
            std::cout << report.unequal_residues->first << '\t'
                      << report.unequal_residues->second;
        } else {
            std::cout << '\t';
        }
        std::cout << "\n";
        return;
    }
    ordered_json j;
    j["m"] = report.modulus;
    j["evenly_distributed"] = report.evenly_distributed;
    j["route"] = to_string(report.route);
    if (report.unequal_residues) {
        j["witness"] = {{"r1", report.unequal_residues->first},
                        {"r2", report.unequal_residues->second}};
    }
    emit_json(j);
}

void cmd_ed_all(const NumericalSemigroup& s, bool tsv) {
    ModulusSet set = ed_all_moduli(s);
    if (tsv) {
        if (set.all_moduli) {
            std::cout << "all_m\ntrue\n";
        } else {
            std::cout << "m\n";
            for (Int m : set.moduli) std::cout << m << "\n";
        }
        return;
    }
    ordered_json j;
    if (set.all_moduli) {
        j["all_m"] = true;
    } else {
        j["moduli"] = set.moduli;
    }
    emit_json(j);
}

std::string ed_condition(const FamilyClassification& c) {
    using Tag = FamilyClassification::Tag;
    std::ostringstream out;
    switch (c.tag) {
        case Tag::EmbDim2:
            out << "gcd(" << c.a * c.b << ", m) == 1 and (m | " << c.a - 1 << " or m | "
                << c.b - 1 << ")";
            break;
        case Tag::Mult2:
            out << "m is odd and m | " << (c.b - 1) / 2;
            break;
        case Tag::GenArithMED:
            out << "gcd(" << c.a * c.d << ", m) == 1 and (m | " << c.a - 1 << " or (m | "
                << c.a - 2 << " and m | " << 2 * c.h + c.d - 1 << ") or (m | " << c.d - 1
                << " and m | " << c.h << ") or (m | " << c.d + 1 << " and m | " << c.h - 1
                << "))";
            break;
        case Tag::ArithMED:
            out << "gcd(" << c.a * c.d << ", m) == 1 and (m | " << c.a - 1 << " or m | "
                << c.d + 1 << ")";
            break;
        case Tag::Other:
            break;
    }
    return out.str();
}

void cmd_classify(const NumericalSemigroup& s, bool tsv) {
    using Tag = FamilyClassification::Tag;
    FamilyClassification c = classify_family(s);
    std::string condition = ed_condition(c);
    if (tsv) {
        auto cell = [](bool used, Int v) { return used ? std::to_string(v) : std::string(); };
        bool has_a = c.tag == Tag::EmbDim2 || c.tag == Tag::GenArithMED || c.tag == Tag::ArithMED;
        bool has_b = c.tag == Tag::EmbDim2 || c.tag == Tag::Mult2;
        bool has_h = c.tag == Tag::GenArithMED;
        bool has_d = c.tag == Tag::GenArithMED || c.tag == Tag::ArithMED;
        std::cout << "family\ta\tb\th\td\ted_condition\n";
        std::cout << to_string(c.tag) << '\t' << cell(has_a, c.a) << '\t' << cell(has_b, c.b)
                  << '\t' << cell(has_h, c.h) << '\t' << cell(has_d, c.d) << '\t' << condition
                  << "\n";
        return;
    }
    ordered_json j;
    j["family"] = to_string(c.tag);
    switch (c.tag) {
        case Tag::EmbDim2:
            j["a"] = c.a;
            j["b"] = c.b;
            break;
        case Tag::Mult2:
            j["b"] = c.b;
            break;
        case Tag::GenArithMED:
            j["a"] = c.a;
            j["h"] = c.h;
            j["d"] = c.d;
            break;
        case Tag::ArithMED:
            j["a"] = c.a;
            j["d"] = c.d;
            break;
        case Tag::Other:
            break;
    }
    if (!condition.empty()) j["ed_condition"] = condition;
    emit_json(j);
}

int cmd_verify(const SweepReport& report, bool tsv) {
    if (tsv) {
        std::cout << "sweep\tinstances_checked\tmismatch_count\n";
        std::cout << report.sweep_name << '\t' << report.instances_checked << '\t'
                  << report.mismatches.size() << "\n";
    } else {
        ordered_json j;
        j["sweep"] = report.sweep_name;
        j["instances_checked"] = report.instances_checked;
        j["mismatch_count"] = report.mismatches.size();
        ordered_json list = ordered_json::array();
        for (const SweepMismatch& mm : report.mismatches) {
            list.push_back({{"parameters", mm.parameters},
                            {"expected", mm.expected},
                            {"got", mm.got}});
        }
        j["mismatches"] = list;
        emit_json(j);
    }
    std::cerr << "# sweep " << report.sweep_name << ": " << report.instances_checked
              << " instances, " << report.mismatches.size() << " mismatches, "
              << report.elapsed_ms << " ms\n";
    for (const SweepMismatch& mm : report.mismatches) {
        std::cerr << "mismatch: " << mm.parameters << " expected " << mm.expected << " got "
                  << mm.got << "\n";
    }
    return report.mismatches.empty() ? 0 : 3;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical semigroup gap-distribution toolkit"};
    app.require_subcommand(1);

    std::string format = "json";
    GeneratorArgs info_gens, apery_gens, gaps_gens, ed_gens, edall_gens, classify_gens;
    Int rel = 0, mod = 0;
    std::string sweep_name;
    Int max_b = 40, max_a = 12, max_hd = 10;
    long long trials = 200;
    std::uint64_t seed = 42;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "tsv"}))
            ->capture_default_str();
    };

    CLI::App* info = app.add_subcommand("info", "fundamental invariants");
    info_gens.attach(info);
    add_format(info);

    CLI::App* apery = app.add_subcommand("apery", "Apery set relative to --rel");
    apery_gens.attach(apery);
    apery->add_option("--rel", rel, "nonzero member to take the Apery set against")->required();
    add_format(apery);

    CLI::App* gaps = app.add_subcommand("gaps", "the gap set");
    gaps_gens.attach(gaps);
    add_format(gaps);

    CLI::App* ed = app.add_subcommand("ed", "is the gap set evenly distributed mod --mod");
    ed_gens.attach(ed);
    ed->add_option("--mod", mod, "modulus")->required();
    add_format(ed);

    CLI::App* edall = app.add_subcommand("ed-all", "all moduli with evenly distributed gaps");
    edall_gens.attach(edall);
    add_format(edall);

    CLI::App* classify = app.add_subcommand("classify", "closed-form family classification");
    classify_gens.attach(classify);
    add_format(classify);

    CLI::App* verify = app.add_subcommand("verify", "exhaustive cross-check sweeps");
    verify->add_option("name", sweep_name, "sweep to run")
        ->check(CLI::IsMember({"emb2", "genarith", "equiv"}))
        ->required();
    verify->add_option("--max-b", max_b, "emb2: largest generator")->capture_default_str();
    verify->add_option("--max-a", max_a, "genarith: largest multiplicity")->capture_default_str();
    verify->add_option("--max-hd", max_hd, "genarith: largest h and d")->capture_default_str();
    verify->add_option("--trials", trials, "equiv: number of random semigroups")
        ->capture_default_str();
    verify->add_option("--seed", seed, "equiv: random seed")->capture_default_str();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    bool tsv = (format == "tsv");
    try {
        if (app.got_subcommand(info)) {
            cmd_info(NumericalSemigroup::from_generators(info_gens.build()), tsv);
        } else if (app.got_subcommand(apery)) {
            cmd_apery(NumericalSemigroup::from_generators(apery_gens.build()), rel, tsv);
        } else if (app.got_subcommand(gaps)) {
            cmd_gaps(NumericalSemigroup::from_generators(gaps_gens.build()), tsv);
        } else if (app.got_subcommand(ed)) {
            cmd_ed(NumericalSemigroup::from_generators(ed_gens.build()), mod, tsv);
        } else if (app.got_subcommand(edall)) {
            cmd_ed_all(NumericalSemigroup::from_generators(edall_gens.build()), tsv);
        } else if (app.got_subcommand(classify)) {
            cmd_classify(NumericalSemigroup::from_generators(classify_gens.build()), tsv);
        } else if (app.got_subcommand(verify)) {
            SweepReport report;
            if (sweep_name == "emb2") {
                report = sweep_embdim2(max_b);
            } else if (sweep_name == "genarith") {
                report = sweep_gen_arith(max_a, max_hd);
            } else {
                report = sweep_equivalences(trials, seed);
            }
            return cmd_verify(report, tsv);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
