#include "demazure/hopping.hpp"
#include "demazure/oracle.hpp"
#include "demazure/permutation.hpp"
#include "demazure/signed_permutation.hpp"
#include "demazure/text.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace demazure;

namespace {

using Word = std::vector<int>;

Word entries(const Permutation& w) { return {w.entries().begin(), w.entries().end()}; }
Word entries(const SignedPermutation& w) { return {w.entries().begin(), w.entries().end()}; }

} // namespace

PYBIND11_MODULE(demazure, m) {
    m.doc() = "Demazure (0-Hecke) products on S_n and B_n via hopping operators";

    py::register_exception<std::out_of_range>(m, "RankCapError", PyExc_ValueError);

    m.def("star", [](Word w, Word v) { return entries(star(Permutation(w), Permutation(v))); },
          py::arg("w"), py::arg("v"), "w * v in S_n by hopping operators.");
    m.def("star_oracle", [](Word w, Word v) { return entries(demazure_oracle(Permutation(w), Permutation(v))); },
          py::arg("w"), py::arg("v"), "w * v by folding the 0-Hecke rule over a reduced word.");
    m.def(
        "star_trace",
        [](Word w, Word v) {
            std::vector<std::vector<std::string>> blocks;
            for (const auto& t : demazure_star(Permutation(w), Permutation(v)).traces) {
                blocks.push_back(render_trace(t));
            }
            return blocks;
        },
        py::arg("w"), py::arg("v"), "Rendered hop traces, one block per tracked value.");
    m.def(
        "hop", [](Word w, int t, Word list) { return entries(hop(Permutation(w), t, HopList(list)).word); },
        py::arg("w"), py::arg("t"), py::arg("targets"));

    m.def("star_b", [](Word w, Word v) { return entries(star_b(SignedPermutation(w), SignedPermutation(v))); },
          py::arg("w"), py::arg("v"), "Signed product by mirrored hopping on the unfolding.");
    m.def(
        "star_b_unfolded",
        [](Word w, Word v) { return entries(demazure_star_b_unfolded(SignedPermutation(w), SignedPermutation(v))); },
        py::arg("w"), py::arg("v"), "Signed product as fold(unfold(w) * unfold(v)).");
    m.def(
        "star_b_oracle",
        [](Word w, Word v) { return entries(demazure_oracle_b(SignedPermutation(w), SignedPermutation(v))); },
        py::arg("w"), py::arg("v"));
    m.def(
        "hop_b", [](Word w, int t, Word list) { return entries(hop_b(SignedPermutation(w), t, HopList(list)).word); },
        py::arg("w"), py::arg("t"), py::arg("targets"));

    m.def("unfold", [](Word w) { return entries(unfold(SignedPermutation(w))); }, py::arg("w"));
    m.def("fold", [](Word p) { return entries(fold(Permutation(p))); }, py::arg("p"));

    m.def("length", [](Word w) { return length(Permutation(w)); }, py::arg("w"));
    m.def("length_b", [](Word w) { return length_b(SignedPermutation(w)); }, py::arg("w"));
    m.def("reduced_word", [](Word w) { return reduced_word(Permutation(w)); }, py::arg("w"));
    m.def("inversion_sequence", [](Word w) { return inversion_sequence(Permutation(w)).js; }, py::arg("w"));
    m.def(
        "reconstruct",
        [](Word js) { return entries(reconstruct(InversionSequence{static_cast<int>(js.size()) + 1, js})); },
        py::arg("js"));
    m.def("inversion_sequence_b", [](Word w) { return inversion_sequence_b(SignedPermutation(w)); }, py::arg("w"));
    m.def(
        "reconstruct_b", [](Word js) { return entries(reconstruct_b(js, static_cast<int>(js.size()))); },
        py::arg("js"));

    m.def("bruhat_leq", [](Word u, Word w) { return bruhat_leq(Permutation(u), Permutation(w)); },
          py::arg("u"), py::arg("w"));
    m.def(
        "lower_interval",
        [](Word w) {
            std::vector<Word> out;
            for (const auto& u : lower_interval(Permutation(w))) out.push_back(entries(u));
            return out;
        },
        py::arg("w"));
}
