/**************************************************************************
 * gfqldpc_module.cpp
 *
 * Copyright 2026 The gfqldpc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#include <optional>

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gfqldpc/code.hpp"
#include "gfqldpc/decoder.hpp"
#include "gfqldpc/galois.hpp"
#include "gfqldpc/oracle.hpp"
#include "gfqldpc/radius.hpp"
#include "gfqldpc/sim.hpp"

namespace py = pybind11;
using namespace gfqldpc;

PYBIND11_MODULE(_core, m) {
    m.doc() = "single- and multi-threshold majority decoding of regular LDPC codes over GF(q)";

    py::class_<Field>(m, "Field")
        .def_static("of_order", &Field::of_order, py::arg("q"), py::arg("modulus") = 0)
        .def_property_readonly("order", &Field::order)
        .def_property_readonly("characteristic", &Field::characteristic)
        .def_property_readonly("degree", &Field::degree)
        .def_property_readonly("modulus", &Field::modulus)
        .def_property_readonly("generator", &Field::generator)
        .def("add", &Field::add)
        .def("sub", &Field::sub)
        .def("neg", &Field::neg)
        .def("mul", &Field::mul)
        .def("inv", &Field::inv)
        .def("div", &Field::div)
        .def(py::self == py::self);

    py::class_<CodeParams>(m, "CodeParams")
        .def(py::init([](std::uint32_t length, std::uint32_t var_degree,
                         std::uint32_t check_degree, std::uint32_t field_order,
                         std::uint32_t modulus) {
                 return CodeParams{length, var_degree, check_degree, field_order, modulus};
             }),
             py::arg("length"), py::arg("var_degree"), py::arg("check_degree"),
             py::arg("field_order"), py::arg("modulus") = 0)
        .def_readonly("length", &CodeParams::length)
        .def_readonly("var_degree", &CodeParams::var_degree)
        .def_readonly("check_degree", &CodeParams::check_degree)
        .def_readonly("field_order", &CodeParams::field_order)
        .def_readonly("modulus", &CodeParams::modulus)
        .def("check_count", &CodeParams::check_count)
        .def("validate", &CodeParams::validate);

    py::class_<LdpcCode>(m, "LdpcCode")
        .def_property_readonly("params", &LdpcCode::params)
        .def_property_readonly("field", &LdpcCode::field)
        .def_property_readonly("length", &LdpcCode::length)
        .def_property_readonly("var_degree", &LdpcCode::var_degree)
        .def_property_readonly("check_degree", &LdpcCode::check_degree)
        .def_property_readonly("check_count", &LdpcCode::check_count)
        .def("serialize", &serialize_code);

    m.def("sample_regular_code", &sample_regular_code, py::arg("params"), py::arg("seed"));
    m.def("load_code", &load_code, py::arg("path"));
    m.def("save_code", &save_code, py::arg("code"), py::arg("path"));

    py::class_<Syndrome>(m, "Syndrome")
        .def_readonly("values", &Syndrome::values)
        .def_readonly("weight", &Syndrome::weight);
    m.def("compute_syndrome", &compute_syndrome, py::arg("code"), py::arg("word"));

    py::class_<ThresholdSchedule>(m, "ThresholdSchedule")
        .def(py::init<std::vector<std::uint32_t>>(), py::arg("thetas"))
        .def_static("parse", &ThresholdSchedule::parse, py::arg("text"))
        .def_static("full", &ThresholdSchedule::full, py::arg("var_degree"))
        .def_property_readonly("thetas", &ThresholdSchedule::thetas)
        .def("__str__", &ThresholdSchedule::str)
        .def(py::self == py::self);

    py::class_<TraceEvent>(m, "TraceEvent")
        .def_readonly("position", &TraceEvent::position)
        .def_readonly("old_value", &TraceEvent::old_value)
        .def_readonly("new_value", &TraceEvent::new_value)
        .def_readonly("threshold", &TraceEvent::threshold)
        .def_readonly("syndrome_weight_after", &TraceEvent::syndrome_weight_after)
        .def_readonly("true_error_weight_after", &TraceEvent::true_error_weight_after);

    py::class_<PhaseStats>(m, "PhaseStats")
        .def_readonly("threshold", &PhaseStats::threshold)
        .def_readonly("replacements", &PhaseStats::replacements)
        .def_readonly("sweeps", &PhaseStats::sweeps);

    py::class_<DecodeResult>(m, "DecodeResult")
        .def_readonly("word", &DecodeResult::word)
        .def_readonly("failure", &DecodeResult::failure)
        .def_readonly("trace", &DecodeResult::trace)
        .def_readonly("passes", &DecodeResult::passes)
        .def_readonly("replacements", &DecodeResult::replacements)
        .def_readonly("phases", &DecodeResult::phases);

    m.def(
        "decode_single",
        [](const LdpcCode& code, const Word& received, std::uint32_t threshold,
           const std::optional<Word>& reference) {
            return decode_single(code, received, threshold, reference ? &*reference : nullptr);
        },
        py::arg("code"), py::arg("received"), py::arg("threshold"),
        py::arg("reference") = py::none());
    m.def(
        "decode_multi",
        [](const LdpcCode& code, const Word& received, const ThresholdSchedule& schedule,
           const std::optional<Word>& reference) {
            return decode_multi(code, received, schedule, reference ? &*reference : nullptr);
        },
        py::arg("code"), py::arg("received"), py::arg("schedule"),
        py::arg("reference") = py::none());

    m.def("threshold_bound", &threshold_bound, py::arg("theta"), py::arg("error_weight"),
          py::arg("var_degree"));
    m.def("alpha_single", &alpha_single, py::arg("var_degree"));
    m.def("alpha_multi", &alpha_multi, py::arg("var_degree"));
    m.def("w_sequence", &w_sequence, py::arg("w_star"), py::arg("schedule"),
          py::arg("var_degree"));
    m.def("guaranteed_weight_floor", &guaranteed_weight_floor, py::arg("w_star"),
          py::arg("schedule"), py::arg("var_degree"));

    py::enum_<Verdict>(m, "Verdict")
        .value("pass_", Verdict::pass)
        .value("vacuous", Verdict::vacuous)
        .value("fail", Verdict::fail);
    m.def("verify_lemma2", &verify_lemma2, py::arg("code"), py::arg("theta"), py::arg("error"));

    py::class_<SubgraphCensus>(m, "SubgraphCensus")
        .def_readonly("error_weight", &SubgraphCensus::error_weight)
        .def_readonly("syndrome_weight", &SubgraphCensus::syndrome_weight)
        .def_readonly("detected_by_edge_count", &SubgraphCensus::detected_by_edge_count)
        .def_readonly("hidden_check_count", &SubgraphCensus::hidden_check_count)
        .def_readonly("error_positions", &SubgraphCensus::error_positions)
        .def_readonly("edges_to_singly_detected", &SubgraphCensus::edges_to_singly_detected)
        .def_readonly("edges_to_hidden", &SubgraphCensus::edges_to_hidden)
        .def("singly_detected", &SubgraphCensus::singly_detected)
        .def("multiply_detected", &SubgraphCensus::multiply_detected);
    m.def("subgraph_census", &subgraph_census, py::arg("code"), py::arg("error"));

    py::class_<RadiusCertificate>(m, "RadiusCertificate")
        .def_readonly("max_weight", &RadiusCertificate::max_weight)
        .def_readonly("min_syndrome_weight", &RadiusCertificate::min_syndrome_weight)
        .def_readonly("certified_weight", &RadiusCertificate::certified_weight)
        .def_readonly("patterns_enumerated", &RadiusCertificate::patterns_enumerated);
    m.def("certify_code_radius", &certify_code_radius, py::arg("code"), py::arg("max_weight"),
          py::arg("budget"));

    m.def("sample_error_word", &sample_error_word, py::arg("length"), py::arg("field"),
          py::arg("weight"), py::arg("seed"), py::arg("weight_tag"), py::arg("trial"));
    m.def("enumeration_budget", &enumeration_budget);
}
