#include "rss/automorphism.hpp"
#include "rss/errors.hpp"
#include "rss/groups.hpp"
#include "rss/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace rss;

namespace {

py::int_ to_python(const BigInt& n) { return py::int_(py::str(n.str())); }

py::dict decomposition_dict(const Decomposition& d) {
    py::dict out;
    out["pieces"] = d.pieces;
    out["root"] = d.root;
    out["first_full"] = d.first_full;
    out["last_full"] = d.last_full;
    out["text"] = format(d);
    return out;
}

py::list decomposition_list(const auto& ds) {
    py::list out;
    for (const auto& d : ds) out.append(decomposition_dict(d));
    return out;
}

py::dict verdict_dict(const Verdict& v) {
    py::dict out;
    out["pass"] = v.pass;
    out["checked"] = v.checked;
    if (v.witness) out["witness"] = py::make_tuple(v.witness->input, v.witness->expected, v.witness->actual);
    return out;
}

py::dict recognisability_dict(const RecognisabilityVerdict& v) {
    py::dict out;
    out["radius"] = v.radius ? py::object(py::int_(*v.radius)) : py::object(py::none());
    out["bound"] = v.bound;
    py::dict table;
    for (const auto& row : v.table)
        table[py::str(row.word)] = row.radius ? py::object(py::int_(*row.radius)) : py::object(py::none());
    out["table"] = table;
    if (v.witness) {
        out["witness"] = py::make_tuple(v.witness->extension, v.witness->left, decomposition_dict(v.witness->first),
                                        decomposition_dict(v.witness->second));
    }
    return out;
}

} // namespace

PYBIND11_MODULE(_rsskit, m) {
    m.doc() = "random substitution subshift toolkit";
    m.attr("data_dir") = RSS_DATA_DIR;

    py::register_exception<Error>(m, "Error", PyExc_ValueError);

    py::class_<RandomSubstitution>(m, "Substitution")
        .def(py::init([](const std::string& text) { return parse_substitution(text); }), py::arg("text"))
        .def_static("load", &load_substitution, py::arg("path"))
        .def_property_readonly("alphabet", &RandomSubstitution::alphabet)
        .def("images", &RandomSubstitution::images, py::arg("letter"))
        .def_property_readonly("min_image_length", &RandomSubstitution::min_image_length)
        .def_property_readonly("max_image_length", &RandomSubstitution::max_image_length)
        .def("to_spec", &RandomSubstitution::to_spec)
        .def("__eq__", [](const RandomSubstitution& x, const RandomSubstitution& y) { return x == y; });

    m.def("apply", [](const RandomSubstitution& s, const std::string& u) { return rss::apply(s, u); });
    m.def("power", [](const RandomSubstitution& s, unsigned p) { return power(s, p); });
    m.def("abelianise", &abelianise);
    m.def("substitution_matrix", &substitution_matrix);
    m.def("is_compatible", [](const RandomSubstitution& s) { return is_compatible(s).compatible; });
    m.def("is_primitive", [](const RandomSubstitution& s) { return is_primitive(s).primitive; });
    m.def("constant_length", &is_constant_length);
    m.def("has_disjoint_letter_images", [](const RandomSubstitution& s) { return has_disjoint_letter_images(s).disjoint; });

    py::class_<Language, std::shared_ptr<Language>>(m, "Language")
        .def(py::init([](const RandomSubstitution& s) { return std::make_shared<Language>(s); }), py::arg("sub"))
        .def_property_readonly("substitution", &Language::substitution)
        .def("is_legal", &Language::is_legal, py::arg("word"))
        .def("words", [](const Language& l, std::size_t n) { return l.slice(n).words; }, py::arg("length"),
             py::call_guard<py::gil_scoped_release>());

    m.def("word_gap_bound", &word_gap_bound, py::arg("lang"), py::arg("word"), py::arg("m_max"));
    m.def("periodic_candidates", &periodic_candidates, py::arg("lang"), py::arg("p_max"), py::arg("k_max"));
    m.def("decompositions", [](const Language& l, const std::string& u) { return decomposition_list(decompositions(l, u)); });
    m.def("exact_roots", &exact_roots);
    m.def("induced_set", [](const Language& l, const std::string& w, std::size_t i, std::size_t j) {
        return decomposition_list(induced_set(l, w, i, j));
    });
    m.def("word_radius", [](const Language& l, const std::string& u, std::size_t n) {
        return recognisability_dict(word_radius(l, u, n));
    });
    m.def("local_radius", [](const Language& l, std::size_t n) { return recognisability_dict(local_radius(l, n)); });

    py::class_<SlidingBlockCode>(m, "SlidingBlockCode")
        .def_property_readonly("radius", &SlidingBlockCode::radius)
        .def_property_readonly("provenance", &SlidingBlockCode::provenance)
        .def("__call__", [](const SlidingBlockCode& c, const std::string& w) { return apply_central(c, w); })
        .def("apply", [](const SlidingBlockCode& c, const Language& l, const std::string& w) {
            return apply_central(c, l, w);
        })
        .def("apply_cyclic", [](const SlidingBlockCode& c, const std::string& w) { return apply_cyclic(c, w); })
        .def("table", [](const SlidingBlockCode& c, const Language& l) { return export_table(materialise(c, l)); });
    m.def("import_table", [](const std::string& text) { return import_table(text); });
    m.def("compose", [](const SlidingBlockCode& f, const SlidingBlockCode& g) { return compose(f, g); });

    m.def(
        "compile_shuffle",
        [](const RandomSubstitution& s, unsigned level, char letter, const std::string& perm, std::size_t max_radius) {
            const std::size_t count = power(s, level).images(letter).size();
            return compile_shuffle(s, {level, letter, Permutation::parse(perm, count)}, max_radius);
        },
        py::arg("sub"), py::arg("level"), py::arg("letter"), py::arg("perm"), py::arg("max_radius") = default_max_radius);
    m.def("compile_marker_automorphism",
          [](const Language& l, const std::string& u, const std::vector<Word>& gaps, const std::string& perm) {
              return compile_marker_automorphism(
                  l, MarkerSpec{u, default_max_radius, gaps, Permutation::parse(perm, gaps.size())});
          });
    m.def("find_markers", [](const Language& l, const std::string& u, std::size_t n) {
        const MarkerReport r = find_markers(l, u, n);
        return py::make_tuple(r.gaps, r.by_root, r.rootless);
    });

    m.def("verify_endomorphism", [](const SlidingBlockCode& c, const Language& l, std::size_t l_max) {
        return verdict_dict(verify_endomorphism(c, l, l_max));
    });
    m.def("verify_inverse", [](const SlidingBlockCode& f, const SlidingBlockCode& g, const Language& l) {
        return verdict_dict(verify_inverse(f, g, l));
    });
    m.def("verify_identity",
          [](const SlidingBlockCode& f, const Language& l) { return verdict_dict(verify_identity(f, l)); });

    m.def("inflation_counts", [](const RandomSubstitution& s, unsigned n) { return inflation_counts(s, n); });
    m.def("shuffle_group_order", [](const RandomSubstitution& s, unsigned n) {
        const GroupOrderReport r = shuffle_group_order(s, n);
        py::dict out;
        out["counts"] = r.counts;
        out["shuffle_order"] = to_python(r.shuffle_order);
        out["alternating_order"] = to_python(r.alternating_order);
        out["index_divisor"] = to_python(r.index_divisor);
        return out;
    });
    m.def("thompson_count_check", [](unsigned n) {
        const CountCheck c = thompson_count_check(n);
        return py::make_tuple(to_python(c.computed), to_python(c.closed_form));
    });
}
