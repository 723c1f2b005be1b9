#include "rss/automorphism.hpp"
#include "rss/errors.hpp"
#include "rss/groups.hpp"
#include "rss/verify.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace rss;

struct Options {
    std::string spec;
    std::vector<std::string> words;
    std::size_t max_radius = default_max_radius;
    std::size_t length = 0;
    unsigned level = 1;
    std::string letter;
    std::string perm;
    std::size_t max_period = 4;
    std::size_t reps = 8;
    bool one_based = false;
    std::size_t cap = 64;
    std::string shift = "none";
    bool complement = false;
    bool table = false;
    bool cyclic = false;
    std::string apply;
};

std::string resolve_spec(const std::string& name) {
    namespace fs = std::filesystem;
    if (fs::exists(name)) return name;
    for (const fs::path candidate : {fs::path(RSS_DATA_DIR) / name, fs::path(RSS_DATA_DIR) / (name + ".sub")})
        if (fs::exists(candidate)) return candidate.string();
    throw InvalidArgument("no spec file '" + name + "'");
}

std::shared_ptr<const Language> open_language(const Options& o) { return make_language(load_substitution(resolve_spec(o.spec))); }

char the_letter(const Options& o) {
    if (o.letter.size() != 1) throw InvalidArgument("--letter needs a single letter");
    return o.letter[0];
}

const char* yes_no(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    std::ostringstream text;
    text << in.rdbuf();
    return text.str();
}

void print_ambiguity(const Ambiguity& a) {
    std::cout << "witness: " << a.extension << " at " << a.left << '\n';
    std::cout << "first: " << format(a.first) << '\n';
    std::cout << "second: " << format(a.second) << '\n';
}

void print_verdict(const std::string& name, const Verdict& v) {
    std::cout << name << ": " << (v.pass ? "pass" : "fail") << '\n';
    std::cout << "checked: " << v.checked << '\n';
    if (v.witness) {
        std::cout << "input: " << v.witness->input << '\n';
        if (!v.witness->expected.empty()) std::cout << "expected: " << v.witness->expected << '\n';
        std::cout << "actual: " << v.witness->actual << '\n';
    }
}

// optional application of a compiled code to a word, a table dump, or a summary
// metadata lines become comments when a rule table follows, so the output re-imports
std::ostream& meta(const Options& o) { return std::cout << (o.table ? "# " : ""); }

int report_code(const Options& o, const Language& lang, const SlidingBlockCode& code) {
    meta(o) << "provenance: " << code.provenance() << '\n';
    meta(o) << "radius: " << code.radius() << '\n';
    if (!o.apply.empty()) {
        const Word out = o.cyclic ? apply_cyclic(code, o.apply) : apply_central(code, lang, o.apply);
        meta(o) << "output: " << out << '\n';
    }
    if (o.table) std::cout << export_table(materialise(code, lang));
    return 0;
}

SlidingBlockCode binary_code(const std::string& shift, bool complement, bool inverse) {
    SlidingBlockCode base = SlidingBlockCode::identity();
    if (shift == "left")
        base = inverse ? right_shift(2) : left_shift(2);
    else if (shift == "right")
        base = inverse ? left_shift(2) : right_shift(2);
    else if (shift != "none")
        throw InvalidArgument("--shift takes left, right or none");
    if (!complement) return shift == "none" ? symbol_permutation("01", "identity") : base;
    return compose(symbol_permutation("10", "complement"), base);
}

int cmd_props(const Options& o) {
    const RandomSubstitution sub = load_substitution(resolve_spec(o.spec));
    const auto compat = is_compatible(sub);
    const auto prim = is_primitive(sub);
    const auto constant = is_constant_length(sub);
    const auto disjoint = has_disjoint_letter_images(sub);
    std::cout << "alphabet: " << sub.alphabet() << '\n';
    std::cout << "compatible: " << yes_no(compat.compatible) << '\n';
    if (!compat.compatible)
        std::cout << "incompatible: " << compat.letter << ' ' << compat.first << ' ' << compat.second << '\n';
    std::cout << "primitive: " << yes_no(prim.primitive) << '\n';
    if (prim.power) std::cout << "primitive-power: " << *prim.power << '\n';
    std::cout << "constant-length: " << (constant ? std::to_string(*constant) : "false") << '\n';
    std::cout << "disjoint-images: " << yes_no(disjoint.disjoint) << '\n';
    if (compat.compatible) {
        std::cout << "matrix:";
        for (const auto& row : substitution_matrix(sub)) {
            std::cout << ' ';
            for (std::size_t j = 0; j < row.size(); ++j) std::cout << (j ? "," : "") << row[j];
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_language(const Options& o) {
    const RandomSubstitution sub = load_substitution(resolve_spec(o.spec));
    if (o.length == 0) {
        const RandomSubstitution level = power(sub, o.level);
        for (char c : sub.alphabet()) {
            if (!o.letter.empty() && c != the_letter(o)) continue;
            for (const Word& w : level.images(c)) std::cout << c << ": " << w << '\n';
        }
        return 0;
    }
    const Language lang(sub);
    for (const Word& w : lang.slice(o.length).words) std::cout << w << '\n';
    return 0;
}

int cmd_legal(const Options& o) {
    const auto lang = open_language(o);
    const bool legal = lang->is_legal(o.words.at(0));
    std::cout << "legal: " << yes_no(legal) << '\n';
    return legal ? 0 : 1;
}

int cmd_gaps(const Options& o) {
    const auto lang = open_language(o);
    const auto bound = word_gap_bound(*lang, o.words.at(0), o.cap);
    if (!bound) {
        std::cout << "gap: absent up to " << o.cap << '\n';
        return 1;
    }
    std::cout << "gap: " << *bound << '\n';
    return 0;
}

int cmd_periodic(const Options& o) {
    const auto lang = open_language(o);
    for (const Word& w : periodic_candidates(*lang, o.max_period, o.reps)) std::cout << w << '\n';
    return 0;
}

int cmd_decompose(const Options& o) {
    const auto lang = open_language(o);
    for (const Decomposition& d : decompositions(*lang, o.words.at(0))) std::cout << format(d) << '\n';
    return 0;
}

std::size_t parse_index(const std::string& text, bool one_based) {
    std::size_t used = 0;
    long long value = -1;
    try {
        value = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not an index: '" + text + "'");
    }
    if (used != text.size() || value < (one_based ? 1 : 0)) throw IndexOutOfRange("bad index '" + text + "'");
    return static_cast<std::size_t>(value) - (one_based ? 1 : 0);
}

int cmd_induced(const Options& o) {
    if (o.words.size() != 3) throw InvalidArgument("induced needs a word and two indices");
    const auto lang = open_language(o);
    const std::size_t i = parse_index(o.words[1], o.one_based), j = parse_index(o.words[2], o.one_based);
    for (const auto& d : induced_set(*lang, o.words[0], i, j)) std::cout << format(d) << '\n';
    return 0;
}

int cmd_recognise(const Options& o) {
    const auto lang = open_language(o);
    const auto v = word_radius(*lang, o.words.at(0), o.max_radius);
    std::cout << "word: " << v.subject << '\n';
    std::cout << "radius: " << (v.radius ? std::to_string(*v.radius) : "none") << '\n';
    std::cout << "searched: " << v.bound << '\n';
    if (v.witness) print_ambiguity(*v.witness);
    return v.certified() ? 0 : 1;
}

int cmd_recognisable(const Options& o) {
    const auto lang = open_language(o);
    const auto v = local_radius(*lang, o.max_radius);
    for (const auto& row : v.table)
        std::cout << row.word << ": " << (row.radius ? std::to_string(*row.radius) : "none") << '\n';
    std::cout << "radius: " << (v.radius ? std::to_string(*v.radius) : "none") << '\n';
    std::cout << "searched: " << v.bound << '\n';
    if (v.witness) print_ambiguity(*v.witness);
    return v.certified() ? 0 : 1;
}

int cmd_shuffle(const Options& o) {
    const auto lang = open_language(o);
    const char letter = the_letter(o);
    const std::size_t count = power(lang->substitution(), o.level).images(letter).size();
    const ShuffleSpec spec{o.level, letter, Permutation::parse(o.perm, count)};
    return report_code(o, *lang, compile_shuffle(lang->substitution(), spec, o.max_radius));
}

int cmd_embed(const Options& o) {
    const auto lang = open_language(o);
    const char letter = the_letter(o);
    const std::size_t count = lang->substitution().images(letter).size();
    SlidingBlockCode alpha = SlidingBlockCode::identity();
    if (o.shift == "left")
        alpha = left_shift(count);
    else if (o.shift == "right")
        alpha = right_shift(count);
    else if (o.shift == "none") {
        const Permutation p = Permutation::parse(o.perm, count);
        std::string images;
        for (std::size_t k = 0; k < count; ++k) images += symbol(p(k));
        alpha = symbol_permutation(images, "permutation " + p.cycles());
    } else
        throw InvalidArgument("--shift takes left, right or none");
    return report_code(o, *lang, compile_full_shift_embedding(lang->substitution(), letter, alpha, o.max_radius, o.cap));
}

int cmd_marker(const Options& o) {
    const auto lang = open_language(o);
    const Word marker = o.words.at(0);
    if (o.words.size() == 1) {
        const MarkerReport r = find_markers(*lang, marker, o.length);
        for (const auto& [root, gaps] : r.by_root)
            for (const Word& v : gaps) std::cout << "gap: " << v << " root=" << root << '\n';
        for (const Word& v : r.rootless) std::cout << "gap: " << v << " root=none\n";
        return r.gaps.empty() ? 1 : 0;
    }
    MarkerSpec spec;
    spec.marker = marker;
    spec.marker_radius = o.max_radius;
    spec.gaps.assign(o.words.begin() + 1, o.words.end());
    spec.pi = Permutation::parse(o.perm, spec.gaps.size());
    meta(o) << "root: " << validate_marker_spec(*lang, spec) << '\n';
    return report_code(o, *lang, compile_marker_automorphism(*lang, spec));
}

int cmd_conveyor(const Options& o) {
    if (o.words.size() != 5) throw InvalidArgument("conveyor needs a marker and four gap words v00 v01 v10 v11");
    const auto lang = open_language(o);
    ConveyorSpec spec;
    spec.marker = o.words[0];
    spec.gaps = {{{o.words[1], o.words[2]}, {o.words[3], o.words[4]}}};
    spec.gap_threshold = o.length;
    spec.forward = binary_code(o.shift, o.complement, false);
    spec.inverse = binary_code(o.shift, o.complement, true);
    meta(o) << "visibility: " << conveyor_visibility_bound(*lang, spec) << '\n';
    return report_code(o, *lang, compile_conveyor(*lang, spec));
}

int cmd_verify(const Options& o) {
    if (o.words.empty() || o.words.size() > 2) throw InvalidArgument("verify needs one or two table files");
    const auto lang = open_language(o);
    const SlidingBlockCode f = import_table(read_file(o.words[0]), o.words[0]);
    const Verdict endo = verify_endomorphism(f, *lang, o.length ? o.length : 1);
    print_verdict("endomorphism", endo);
    bool ok = endo.pass;
    if (o.words.size() == 2) {
        const SlidingBlockCode g = import_table(read_file(o.words[1]), o.words[1]);
        const Verdict inv = verify_inverse(f, g, *lang);
        print_verdict("inverse", inv);
        ok = ok && inv.pass;
    }
    return ok ? 0 : 1;
}

int cmd_orders(const Options& o) {
    const RandomSubstitution sub = load_substitution(resolve_spec(o.spec));
    const GroupOrderReport r = shuffle_group_order(sub, o.level);
    std::cout << "level: " << r.level << '\n';
    for (const auto& [letter, count] : r.counts) std::cout << "count " << letter << ": " << count << '\n';
    std::cout << "shuffle-order: " << r.shuffle_order << '\n';
    std::cout << "alternating-order: " << r.alternating_order << '\n';
    std::cout << "index-divisor: " << r.index_divisor << '\n';
    std::cout << "alphabet-bound: " << r.alphabet_bound << '\n';
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"random substitution subshift toolkit"};
    app.require_subcommand(1);
    Options o;
    int status = 0;

    struct Command {
        const char* name;
        const char* help;
        int (*run)(const Options&);
        std::size_t words_min, words_max;
    };
    const std::vector<Command> commands = {
        {"props", "structural properties", cmd_props, 0, 0},
        {"language", "legal words of one length, or level images", cmd_language, 0, 0},
        {"legal", "legality of a word", cmd_legal, 1, 1},
        {"gaps", "length after which every legal word contains the word", cmd_gaps, 1, 1},
        {"periodic", "periodic candidates", cmd_periodic, 0, 0},
        {"decompose", "inflation word decompositions", cmd_decompose, 1, 1},
        {"induced", "induced decompositions on [i, j]", cmd_induced, 3, 3},
        {"recognise", "recognisability radius of a word", cmd_recognise, 1, 1},
        {"recognisable", "local recognisability radius", cmd_recognisable, 0, 0},
        {"shuffle", "compile a shuffle", cmd_shuffle, 0, 0},
        {"embed", "compile a full-shift embedding", cmd_embed, 0, 0},
        {"marker", "list gap words, or compile a marker automorphism", cmd_marker, 1, 64},
        {"conveyor", "compile a conveyor belt automorphism", cmd_conveyor, 5, 5},
        {"verify", "verify exported rule tables", cmd_verify, 1, 2},
        {"orders", "shuffle group orders", cmd_orders, 0, 0},
    };

    for (const Command& c : commands) {
        CLI::App* sub = app.add_subcommand(c.name, c.help);
        sub->add_option("spec", o.spec, "spec file or bundled name")->required();
        if (c.words_max > 0) {
            auto* opt = sub->add_option("words", o.words, "words and indices");
            opt->expected(static_cast<int>(c.words_min), static_cast<int>(c.words_max));
            if (c.words_min > 0) opt->required();
        }
        sub->add_option("--max-radius", o.max_radius, "largest radius searched");
        sub->add_option("--length", o.length, "word length, gap length or threshold");
        sub->add_option("--level", o.level, "substitution power");
        sub->add_option("--letter", o.letter, "letter");
        sub->add_option("--perm", o.perm, "permutation in 1-based cycle notation");
        sub->add_option("--max-period", o.max_period, "largest period probed");
        sub->add_option("--reps", o.reps, "repetitions required");
        sub->add_flag("--one-based", o.one_based, "indices start at 1");
        sub->add_option("--cap", o.cap, "search cap");
        sub->add_option("--shift", o.shift, "left, right or none");
        sub->add_flag("--complement", o.complement, "complement the conveyor bits");
        sub->add_flag("--table", o.table, "print the rule table");
        sub->add_flag("--cyclic", o.cyclic, "apply to a periodic word");
        sub->add_option("--apply", o.apply, "word to apply the code to");
        sub->callback([&o, &status, run = c.run] { status = run(o); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const rss::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}
