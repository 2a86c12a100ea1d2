#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bfkit/analysis.hpp"
#include "bfkit/anf_parser.hpp"
#include "bfkit/constructions.hpp"
#include "bfkit/search.hpp"
#include "bfkit/walsh_theory.hpp"

namespace py = pybind11;

using bfkit::Anf;
using bfkit::CanonicalizedMap;
using bfkit::FourierSpectrum;
using bfkit::FunctionFamily;
using bfkit::GeneralInstance;
using bfkit::PropertyReport;
using bfkit::TruthTable;
using bfkit::VectorialMap;
using bfkit::WalshSpectrum;

namespace {

py::dict report_dict(const PropertyReport& r) {
  py::dict d;
  d["n"] = r.n_vars;
  d["nonlinearity"] = r.nonlinearity;
  d["bent"] = r.is_bent;
  d["plateaued_amplitude"] = r.plateaued_amplitude
                                 ? py::cast(*r.plateaued_amplitude)
                                 : py::object(py::none());
  d["resiliency"] = r.resiliency_order;
  d["balanced"] = r.is_balanced;
  d["degree"] = r.degree;
  return d;
}

py::dict hit_dict(const bfkit::SearchHit& hit) {
  py::dict d;
  d["trial"] = hit.trial;
  d["n"] = hit.s + hit.t;
  d["s"] = hit.s;
  d["t"] = hit.t;
  d["k"] = hit.k;
  d["g"] = hit.g_hex;
  d["coords"] = hit.coord_hex;
  d["members"] = hit.member_hex;
  d["function"] = hit.function_hex;
  d["formula"] = hit.formula;
  d["report"] = report_dict(hit.report);
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact construction and spectral analysis of Boolean functions";
  m.attr("MAX_VARS") = bfkit::kMaxVars;

  py::class_<TruthTable>(m, "TruthTable")
      .def(py::init<int>(), py::arg("n_vars") = 0)
      .def_static("constant", &TruthTable::constant, py::arg("n_vars"), py::arg("bit"))
      .def_static("variable", &TruthTable::variable, py::arg("n_vars"), py::arg("i"))
      .def_static("from_bits", &TruthTable::from_bits, py::arg("n_vars"), py::arg("bits"))
      .def_static("from_hex",
                  [](int n, const std::string& hex) { return TruthTable::from_hex(n, hex); },
                  py::arg("n_vars"), py::arg("hex"))
      .def_static("from_anf",
                  [](const std::string& expr, int n) {
                    return bfkit::table_from_string("anf:" + expr, n);
                  },
                  py::arg("expr"), py::arg("n_vars"))
      .def_property_readonly("n_vars", &TruthTable::n_vars)
      .def("__len__", &TruthTable::size)
      .def("get", &TruthTable::get, py::arg("idx"))
      .def("set", &TruthTable::set, py::arg("idx"), py::arg("bit"))
      .def("__call__", &TruthTable::get, py::arg("idx"))
      .def("weight", &TruthTable::weight)
      .def("is_zero", &TruthTable::is_zero)
      .def("to_hex", &TruthTable::to_hex)
      .def("bits", &TruthTable::bits)
      .def("__xor__", &TruthTable::operator^)
      .def("__and__", &TruthTable::operator&)
      .def("__invert__", &TruthTable::operator~)
      .def("__eq__",
           [](const TruthTable& a, const TruthTable& b) { return a == b; },
           py::is_operator())
      .def("__repr__", [](const TruthTable& t) {
        return "TruthTable(n_vars=" + std::to_string(t.n_vars()) + ", hex='" +
               t.to_hex() + "')";
      });

  py::class_<WalshSpectrum>(m, "WalshSpectrum")
      .def(py::init<int, std::vector<std::int64_t>>(), py::arg("n_vars"), py::arg("values"))
      .def_property_readonly("n_vars", &WalshSpectrum::n_vars)
      .def("__len__", &WalshSpectrum::size)
      .def("__getitem__",
           [](const WalshSpectrum& w, std::uint64_t a) {
             if (a >= w.size()) throw py::index_error();
             return w[a];
           })
      .def("values", &WalshSpectrum::values)
      .def("max_abs", &WalshSpectrum::max_abs)
      .def("__eq__",
           [](const WalshSpectrum& a, const WalshSpectrum& b) { return a == b; },
           py::is_operator());

  py::class_<FourierSpectrum>(m, "FourierSpectrum")
      .def_readonly("n_vars", &FourierSpectrum::n_vars)
      .def_readonly("values", &FourierSpectrum::values);

  py::class_<Anf>(m, "Anf")
      .def(py::init<int, std::vector<std::uint32_t>>(), py::arg("n_vars"), py::arg("monomials"))
      .def_property_readonly("n_vars", &Anf::n_vars)
      .def("monomials", &Anf::monomials)
      .def("contains", &Anf::contains, py::arg("mask"))
      .def("degree", &Anf::degree)
      .def("to_table", &Anf::to_table)
      .def("__str__", [](const Anf& a) { return bfkit::to_string(a); })
      .def("__eq__", [](const Anf& a, const Anf& b) { return a == b; },
           py::is_operator());

  m.def("fwht", &bfkit::fwht, py::arg("f"));
  m.def("walsh_at", &bfkit::walsh_at, py::arg("f"), py::arg("a"));
  m.def("fwht_inverse", &bfkit::fwht_inverse, py::arg("spectrum"));
  m.def("fourier", &bfkit::fourier, py::arg("f"));
  m.def("mobius", &bfkit::mobius, py::arg("f"));
  m.def("algebraic_degree", &bfkit::algebraic_degree, py::arg("f"));
  m.def("anf_to_string", [](const Anf& a) { return bfkit::to_string(a); }, py::arg("anf"));
  m.def("table_from_string",
        [](const std::string& text, int n) { return bfkit::table_from_string(text, n); },
        py::arg("text"), py::arg("n_vars"));

  m.def("nonlinearity",
        py::overload_cast<const TruthTable&>(&bfkit::nonlinearity), py::arg("f"));
  m.def("is_bent", py::overload_cast<const TruthTable&>(&bfkit::is_bent), py::arg("f"));
  m.def("plateaued_amplitude",
        [](const TruthTable& f) -> py::object {
          const auto v = bfkit::plateaued_amplitude(f);
          return v ? py::cast(*v) : py::object(py::none());
        },
        py::arg("f"));
  m.def("resiliency_order",
        py::overload_cast<const TruthTable&>(&bfkit::resiliency_order), py::arg("f"));
  m.def("is_annihilator_pair", &bfkit::is_annihilator_pair, py::arg("f"), py::arg("h"));
  m.def("analyze",
        [](const TruthTable& f) { return report_dict(bfkit::analyze(f)); },
        py::arg("f"));

  py::class_<VectorialMap>(m, "VectorialMap")
      .def(py::init<int, int, std::vector<TruthTable>>(), py::arg("s"), py::arg("k"),
           py::arg("coords"))
      .def_static("from_words", &VectorialMap::from_words, py::arg("s"), py::arg("k"),
                  py::arg("words"))
      .def_static("constant", &VectorialMap::constant, py::arg("s"), py::arg("k"),
                  py::arg("u"))
      .def_property_readonly("s", &VectorialMap::s)
      .def_property_readonly("k", &VectorialMap::k)
      .def("coord", &VectorialMap::coord, py::arg("i"))
      .def("coords", &VectorialMap::coords)
      .def("__call__", &VectorialMap::operator(), py::arg("x"))
      .def("value_table", &VectorialMap::value_table)
      .def("is_bijective", &VectorialMap::is_bijective)
      .def("__eq__",
           [](const VectorialMap& a, const VectorialMap& b) { return a == b; },
           py::is_operator());

  py::class_<CanonicalizedMap>(m, "CanonicalizedMap")
      .def_readonly("map", &CanonicalizedMap::map)
      .def_readonly("relabeling", &CanonicalizedMap::relabeling);

  py::class_<FunctionFamily>(m, "FunctionFamily")
      .def(py::init<int, int, std::vector<TruthTable>>(), py::arg("t"), py::arg("k"),
           py::arg("members"))
      .def_property_readonly("t", &FunctionFamily::t)
      .def_property_readonly("k", &FunctionFamily::k)
      .def("member_count", &FunctionFamily::member_count)
      .def("member", &FunctionFamily::member, py::arg("u"))
      .def("members", &FunctionFamily::members)
      .def("__eq__",
           [](const FunctionFamily& a, const FunctionFamily& b) { return a == b; },
           py::is_operator());

  m.def("image_set", &bfkit::image_set, py::arg("F"));
  m.def("preimage_indicator", &bfkit::preimage_indicator, py::arg("F"), py::arg("u"));
  m.def("component_select", &bfkit::component_select, py::arg("F"), py::arg("v"));
  m.def("canonicalize_image", &bfkit::canonicalize_image, py::arg("F"));
  m.def("concat_family", &bfkit::concat_family, py::arg("H"));

  py::class_<GeneralInstance>(m, "GeneralInstance")
      .def(py::init<TruthTable, VectorialMap, FunctionFamily>(), py::arg("g"),
           py::arg("F"), py::arg("H"))
      .def_property_readonly("g", &GeneralInstance::g)
      .def_property_readonly("F", &GeneralInstance::F)
      .def_property_readonly("H", &GeneralInstance::H)
      .def_property_readonly("s", &GeneralInstance::s)
      .def_property_readonly("t", &GeneralInstance::t)
      .def_property_readonly("k", &GeneralInstance::k)
      .def_property_readonly("n", &GeneralInstance::n);

  m.def("lift_x", &bfkit::lift_x, py::arg("g"), py::arg("t"));
  m.def("lift_y", &bfkit::lift_y, py::arg("h"), py::arg("s"));
  m.def("direct_sum", &bfkit::direct_sum, py::arg("g"), py::arg("h"));
  m.def("indirect_sum", &bfkit::indirect_sum, py::arg("g"), py::arg("gp"),
        py::arg("h"), py::arg("hp"));
  m.def("gen1", &bfkit::gen1, py::arg("g"), py::arg("gp"), py::arg("gpp"),
        py::arg("h"), py::arg("hp"), py::arg("hpp"));
  m.def("gen2", &bfkit::gen2, py::arg("g"), py::arg("gp"), py::arg("gpp"),
        py::arg("gppp"), py::arg("h"), py::arg("hp"), py::arg("hpp"),
        py::arg("hppp"));
  m.def("size3_sum", &bfkit::size3_sum, py::arg("g"), py::arg("gp"),
        py::arg("gpp"), py::arg("h0"), py::arg("h1"), py::arg("h2"));
  m.def("general_construct", &bfkit::general_construct, py::arg("inst"));
  m.def("expand_k2", &bfkit::expand_k2, py::arg("inst"));
  m.def("expand_k3", &bfkit::expand_k3, py::arg("inst"));
  m.def("absorb_outer", &bfkit::absorb_outer, py::arg("inst"));

  m.def("predict_preimage", &bfkit::predict_preimage, py::arg("inst"), py::arg("a"));
  m.def("predict_charsum", &bfkit::predict_charsum, py::arg("inst"), py::arg("a"));
  m.def("predict_concat", &bfkit::predict_concat, py::arg("inst"), py::arg("a"));
  m.def("predict_spectrum",
        [](const GeneralInstance& inst, const std::string& formula) {
          return bfkit::predict_spectrum(inst, bfkit::formula_from_name(formula))
              .spectrum;
        },
        py::arg("inst"), py::arg("formula"));
  m.def("product_walsh", &bfkit::product_walsh, py::arg("g"), py::arg("h"), py::arg("a"));
  m.def("indirect_walsh", &bfkit::indirect_walsh, py::arg("g"), py::arg("gp"),
        py::arg("h0"), py::arg("h1"), py::arg("a"));
  m.def("size3_walsh_simple", &bfkit::size3_walsh_simple, py::arg("g"),
        py::arg("gp"), py::arg("gpp"), py::arg("h0"), py::arg("h1"), py::arg("h2"),
        py::arg("a"));
  m.def("size3_walsh_fourterm", &bfkit::size3_walsh_fourterm, py::arg("g"),
        py::arg("gp"), py::arg("gpp"), py::arg("h0"), py::arg("h1"), py::arg("h2"),
        py::arg("h3"), py::arg("a"));
  m.def("size3_walsh_final", &bfkit::size3_walsh_final, py::arg("g"),
        py::arg("gp"), py::arg("gpp"), py::arg("h0"), py::arg("h1"), py::arg("h2"),
        py::arg("a"));
  m.def("gen1_walsh", &bfkit::gen1_walsh, py::arg("g"), py::arg("gp"),
        py::arg("gpp"), py::arg("h"), py::arg("hp"), py::arg("hpp"), py::arg("a"));
  m.def("gen1_concat_walsh", &bfkit::gen1_concat_walsh, py::arg("g"),
        py::arg("gp"), py::arg("gpp"), py::arg("h"), py::arg("hp"), py::arg("hpp"),
        py::arg("a"));
  m.def("k2_concat_walsh", &bfkit::k2_concat_walsh, py::arg("inst"), py::arg("a"));
  m.def("annihilator_identity_pointwise", &bfkit::annihilator_identity_pointwise,
        py::arg("g"), py::arg("gp"), py::arg("gpp"));
  m.def("annihilator_identity_spectral", &bfkit::annihilator_identity_spectral,
        py::arg("g"), py::arg("gp"), py::arg("gpp"));

  m.def("run_search",
        [](const std::string& config_text, int jobs) {
          const auto cfg = bfkit::SearchConfig::parse(config_text);
          py::list out;
          for (const auto& hit : bfkit::run_search(cfg, jobs))
            out.append(hit_dict(hit));
          return out;
        },
        py::arg("config_text"), py::arg("jobs") = 1,
        "run a search from config text and return the hits as dicts");
}
