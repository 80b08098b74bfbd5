// Copyright 2026 The tracebox authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "tracebox/io.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace tracebox {

namespace {

Json complex_to_json(const Complex& z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ParseError("complex number must be a [re, im] pair");
    }
    return Complex(j[0].get<double>(), j[1].get<double>());
}

template <typename T>
T field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const Json::exception&) {
        throw ParseError(std::string("field '") + key + "' has the wrong type");
    }
}

const Json& subobject(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            row.push_back(complex_to_json(m(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

ComplexMatrix matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array");
    const std::size_t rows = j.size();
    if (!j[0].is_array() || j[0].empty()) throw ParseError("matrix rows must be arrays");
    const std::size_t cols = j[0].size();
    ComplexMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!j[i].is_array() || j[i].size() != cols) {
            throw ParseError("matrix must be rectangular");
        }
        for (std::size_t k = 0; k < cols; ++k) {
            m(i, k) = complex_from_json(j[i][k]);
        }
    }
    return m;
}

Json operator_to_json(const HermitianOperator& op) {
    return Json{{"local_dims", op.local_dims()}, {"matrix", matrix_to_json(op.matrix())}};
}

HermitianOperator operator_from_json(const Json& j) {
    auto dims = field<std::vector<int>>(j, "local_dims");
    ComplexMatrix m = matrix_from_json(subobject(j, "matrix"));
    return HermitianOperator(std::move(dims), std::move(m));
}

Json scenario_to_json(const Scenario& s) {
    return Json{{"n_parties", s.n_parties},
                {"n_settings", s.n_settings},
                {"n_outcomes", s.n_outcomes}};
}

Scenario scenario_from_json(const Json& j) {
    return Scenario{field<int>(j, "n_parties"), field<int>(j, "n_settings"),
                    field<int>(j, "n_outcomes")};
}

Json box_to_json(const CorrelationBox& box) {
    Json j = scenario_to_json(box.scenario());
    j["probs"] = box.probs();
    return j;
}

CorrelationBox box_from_json(const Json& j) {
    const Scenario sc = scenario_from_json(j);
    auto probs = field<std::vector<double>>(j, "probs");
    return CorrelationBox(sc, std::move(probs));
}

Json measurement_model_to_json(const MeasurementModel& mm) {
    Json parties = Json::array();
    for (int p = 0; p < mm.n_parties(); ++p) {
        Json settings = Json::array();
        for (int x = 0; x < mm.n_settings(); ++x) {
            Json elements = Json::array();
            for (int a = 0; a < mm.n_outcomes(); ++a) {
                elements.push_back(matrix_to_json(mm.povm(p, x).element(a)));
            }
            settings.push_back(std::move(elements));
        }
        parties.push_back(Json{{"dim", mm.local_dims()[p]}, {"settings", settings}});
    }
    return Json{{"parties", parties}};
}

MeasurementModel measurement_model_from_json(const Json& j) {
    const Json& parties = subobject(j, "parties");
    if (!parties.is_array() || parties.empty()) {
        throw ParseError("'parties' must be a nonempty array");
    }
    std::vector<std::vector<Povm>> per_party;
    for (const Json& party : parties) {
        const int dim = field<int>(party, "dim");
        const Json& settings = subobject(party, "settings");
        if (!settings.is_array() || settings.empty()) {
            throw ParseError("'settings' must be a nonempty array");
        }
        std::vector<Povm> povms;
        for (const Json& setting : settings) {
            if (!setting.is_array() || setting.empty()) {
                throw ParseError("each setting must be a nonempty element array");
            }
            std::vector<ComplexMatrix> elements;
            for (const Json& el : setting) {
                ComplexMatrix m = matrix_from_json(el);
                if (m.rows() != dim) {
                    throw ParseError("POVM element does not match declared dim");
                }
                elements.push_back(std::move(m));
            }
            povms.push_back(Povm(std::move(elements)));
        }
        per_party.push_back(std::move(povms));
    }
    return MeasurementModel(std::move(per_party));
}

Json synthesis_model_to_json(const SynthesisModel& model) {
    Json vectors = Json::array();
    for (const auto& setting : model.family.vectors) {
        Json per_setting = Json::array();
        for (const auto& v : setting) {
            Json entries = Json::array();
            for (Eigen::Index i = 0; i < v.size(); ++i) {
                entries.push_back(complex_to_json(v(i)));
            }
            per_setting.push_back(std::move(entries));
        }
        vectors.push_back(std::move(per_setting));
    }
    return Json{{"scenario", scenario_to_json(model.family.scenario)},
                {"seed", model.seed},
                {"local_dim", model.family.local_dim},
                {"weights", model.family.weights},
                {"vectors", vectors},
                {"operator", operator_to_json(model.op)},
                {"measurements", measurement_model_to_json(model.family.povms)}};
}

EvaluationModel evaluation_model_from_json(const Json& j) {
    return EvaluationModel{operator_from_json(subobject(j, "operator")),
                           measurement_model_from_json(subobject(j, "measurements"))};
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw ParseError("invalid JSON in '" + path + "': " + e.what());
    }
}

}  // namespace tracebox
