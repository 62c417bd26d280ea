// Copyright 2026 The mglab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "mglab/json_io.h"

#include <cmath>
#include <cstdio>

#include "mglab/error.h"

namespace mglab {

namespace {

using nlohmann::json;

void dump_into(std::string &out, const json &v, int indent, int level) {
    const auto newline = [&](int lvl) {
        if (indent >= 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * lvl), ' ');
        }
    };
    switch (v.type()) {
        case json::value_t::object: {
            if (v.empty()) {
                out += "{}";
                return;
            }
            out += '{';
            bool first = true;
            for (auto it = v.begin(); it != v.end(); ++it) {
                if (!first) {
                    out += ',';
                }
                first = false;
                newline(level + 1);
                out += json(it.key()).dump();
                out += indent >= 0 ? ": " : ":";
                dump_into(out, it.value(), indent, level + 1);
            }
            newline(level);
            out += '}';
            return;
        }
        case json::value_t::array: {
            if (v.empty()) {
                out += "[]";
                return;
            }
            // Arrays of scalars stay on one line.
            bool flat = true;
            for (const auto &e : v) {
                flat = flat && !e.is_structured();
            }
            out += '[';
            for (std::size_t i = 0; i < v.size(); i++) {
                if (i > 0) {
                    out += flat ? ", " : ",";
                }
                if (!flat) {
                    newline(level + 1);
                }
                dump_into(out, v[i], indent, level + 1);
            }
            if (!flat) {
                newline(level);
            }
            out += ']';
            return;
        }
        case json::value_t::number_float: {
            const double d = v.get<double>();
            if (!std::isfinite(d)) {
                throw Error(ErrorKind::InvalidArgument, "cannot serialize a non-finite number");
            }
            char buf[40];
            std::snprintf(buf, sizeof(buf), "%#.17g", d);
            out += buf;
            return;
        }
        default:
            out += v.dump();
    }
}

const json &require(const json &obj, const char *key) {
    if (!obj.is_object() || !obj.contains(key)) {
        throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    }
    return obj.at(key);
}

template <typename T>
T get_as(const json &v, const char *what) {
    try {
        return v.get<T>();
    } catch (const json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("bad value for ") + what + ": " + e.what());
    }
}

}  // namespace

std::string dump_json(const json &value, int indent) {
    std::string out;
    dump_into(out, value, indent, 0);
    return out;
}

json circuit_to_json(const MatchgateCircuit &circuit) {
    json layers = json::array();
    for (const auto &layer : circuit.layers) {
        json gates = json::array();
        for (const auto &g : layer) {
            json entry;
            entry["wires"] = {g.wires[0], g.wires[1]};
            switch (g.kind) {
                case GateKind::UX:
                    entry["kind"] = "UX";
                    entry["t"] = g.t;
                    break;
                case GateKind::FSWAP:
                    entry["kind"] = "FSWAP";
                    break;
                case GateKind::Custom: {
                    entry["kind"] = "CUSTOM";
                    json matrix = json::array();
                    for (int r = 0; r < 4; r++) {
                        for (int c = 0; c < 4; c++) {
                            matrix.push_back({g.custom(r, c).real(), g.custom(r, c).imag()});
                        }
                    }
                    entry["matrix"] = std::move(matrix);
                    break;
                }
            }
            gates.push_back(std::move(entry));
        }
        layers.push_back(std::move(gates));
    }
    return json{{"n", circuit.n}, {"layers", std::move(layers)}};
}

MatchgateCircuit circuit_from_json(const json &value) {
    MatchgateCircuit c;
    c.n = get_as<std::size_t>(require(value, "n"), "n");
    const json &layers = require(value, "layers");
    if (!layers.is_array()) {
        throw Error(ErrorKind::ParseError, "'layers' must be an array");
    }
    for (const auto &layer : layers) {
        if (!layer.is_array()) {
            throw Error(ErrorKind::ParseError, "each layer must be an array");
        }
        std::vector<Gate2Q> gates;
        for (const auto &entry : layer) {
            Gate2Q g;
            const auto wires = get_as<std::vector<std::size_t>>(require(entry, "wires"), "wires");
            if (wires.size() != 2) {
                throw Error(ErrorKind::ParseError, "'wires' must hold two indices");
            }
            g.wires = {wires[0], wires[1]};
            const auto kind = get_as<std::string>(require(entry, "kind"), "kind");
            if (kind == "UX") {
                g.kind = GateKind::UX;
                g.t = get_as<double>(require(entry, "t"), "t");
            } else if (kind == "FSWAP") {
                g.kind = GateKind::FSWAP;
            } else if (kind == "CUSTOM") {
                g.kind = GateKind::Custom;
                const auto entries = get_as<std::vector<std::array<double, 2>>>(require(entry, "matrix"), "matrix");
                if (entries.size() != 16) {
                    throw Error(ErrorKind::ParseError, "'matrix' must hold 16 [re, im] pairs");
                }
                for (int k = 0; k < 16; k++) {
                    g.custom(k / 4, k % 4) = {entries[k][0], entries[k][1]};
                }
            } else {
                throw Error(ErrorKind::ParseError, "unknown gate kind '" + kind + "'");
            }
            gates.push_back(g);
        }
        c.layers.push_back(std::move(gates));
    }
    return c;
}

json skew_to_json(const SkewMatrix &matrix) {
    json upper = json::array();
    for (const auto &e : matrix.upper_entries()) {
        upper.push_back({e.i, e.j, e.value.real(), e.value.imag()});
    }
    return json{{"dim", matrix.dim()}, {"upper", std::move(upper)}};
}

SkewMatrix skew_from_json(const json &value) {
    const auto dim = get_as<std::size_t>(require(value, "dim"), "dim");
    std::vector<UpperEntry> upper;
    for (const auto &row : require(value, "upper")) {
        if (!row.is_array() || row.size() != 4) {
            throw Error(ErrorKind::ParseError, "upper entries must be [i, j, re, im]");
        }
        upper.push_back({get_as<std::size_t>(row[0], "i"), get_as<std::size_t>(row[1], "j"),
                         {get_as<double>(row[2], "re"), get_as<double>(row[3], "im")}});
    }
    return SkewMatrix::from_upper(dim, upper);
}

json plan_to_json(const EmbeddingPlan &plan) {
    json transpositions = json::array();
    for (std::size_t k : plan.transpositions) {
        transpositions.push_back({k, k + 1});
    }
    return json{{"s", plan.secret.str()},
                {"eta", plan.eta.value()},
                {"m", plan.m},
                {"transpositions", std::move(transpositions)},
                {"local", plan.local}};
}

EmbeddingPlan plan_from_json(const json &value) {
    const Secret s = Secret::from_string(get_as<std::string>(require(value, "s"), "s"));
    const NoiseRate eta(get_as<double>(require(value, "eta"), "eta"));
    const bool local = get_as<bool>(require(value, "local"), "local");
    EmbeddingPlan plan = plan_permutation(s, eta, local);
    if (get_as<std::size_t>(require(value, "m"), "m") != plan.m) {
        throw Error(ErrorKind::ParseError, "plan field 'm' is inconsistent with its secret");
    }
    const auto stored = get_as<std::vector<std::array<std::size_t, 2>>>(require(value, "transpositions"),
                                                                        "transpositions");
    if (stored.size() != plan.transpositions.size()) {
        throw Error(ErrorKind::ParseError, "plan transpositions are inconsistent with its secret");
    }
    for (std::size_t i = 0; i < stored.size(); i++) {
        if (stored[i][0] != plan.transpositions[i] || stored[i][1] != plan.transpositions[i] + 1) {
            throw Error(ErrorKind::ParseError, "plan transpositions are inconsistent with its secret");
        }
    }
    return plan;
}

json report_to_json(const LearnReport &report) {
    json out;
    out["experiment"] = report.experiment;
    out["n"] = report.n;
    out["eta"] = report.eta;
    if (report.tau) {
        out["tau"] = *report.tau;
    }
    out["recovered"] = report.recovered ? json(report.recovered->str()) : json(nullptr);
    if (report.queries_used) {
        out["queries_used"] = *report.queries_used;
    }
    if (report.samples_used) {
        out["samples_used"] = *report.samples_used;
    }
    out["success"] = report.success;
    out["seed"] = report.seed;
    return out;
}

}  // namespace mglab
