// Copyright 2026 The qmetro Authors
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

#include "qmetro/pattern_io.hpp"

#include <charconv>
#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qmetro {

namespace {

std::string format_angle(double a) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", a);
    return buf;
}

int parse_int(const std::string &s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("expected an integer, got '" + s + "'");
    }
    return v;
}

double parse_double(const std::string &s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) {
        throw std::invalid_argument("expected a number, got '" + s + "'");
    }
    return v;
}

char byproduct_char(Byproduct b) {
    switch (b) {
        case Byproduct::X: return 'X';
        case Byproduct::Z: return 'Z';
        case Byproduct::H: return 'H';
    }
    return '?';
}

}  // namespace

std::string parity_to_text(const Parity &p) {
    if (p.is_zero()) {
        return "-";
    }
    std::string out = p.constant ? "1" : "";
    for (int t : p.terms) {
        if (!out.empty()) {
            out += '+';
        }
        out += 's' + std::to_string(t);
    }
    return out;
}

Parity parity_from_text(const std::string &text) {
    if (text == "-") {
        return Parity::zero();
    }
    bool constant = false;
    std::vector<int> terms;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t end = std::min(text.find('+', start), text.size());
        const std::string tok = text.substr(start, end - start);
        if (tok == "1") {
            constant = !constant;
        } else if (tok.size() > 1 && tok[0] == 's') {
            terms.push_back(parse_int(tok.substr(1)));
        } else {
            throw std::invalid_argument("bad parity term '" + tok + "'");
        }
        start = end + 1;
    }
    return Parity::of(std::move(terms), constant);
}

std::string to_text(const MeasurementPattern &p) {
    std::ostringstream os;
    os << "pattern " << (p.name.empty() ? "unnamed" : p.name) << '\n';
    os << "vertices " << p.graph.n_vertices << '\n';
    for (const auto &[a, b] : p.graph.edges) {
        os << "edge " << a << ' ' << b << '\n';
    }
    os << "inputs";
    for (int v : p.inputs) {
        os << ' ' << v;
    }
    os << "\noutputs";
    for (int v : p.outputs) {
        os << ' ' << v;
    }
    os << '\n';
    for (const auto &m : p.measurements) {
        os << "measure " << m.vertex << ' ' << format_angle(m.angle.base) << ' ' << parity_to_text(m.angle.sign) << ' '
           << parity_to_text(m.angle.offset) << '\n';
    }
    for (const auto &c : p.corrections) {
        os << "correct " << c.vertex << ' ' << byproduct_char(c.op) << ' ' << parity_to_text(c.parity) << '\n';
    }
    return os.str();
}

MeasurementPattern from_text(const std::string &text) {
    MeasurementPattern p;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    bool have_vertices = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) {
            tok.push_back(t);
        }
        if (tok.empty() || tok[0][0] == '#') {
            continue;
        }
        try {
            const std::string &key = tok[0];
            auto need = [&](std::size_t n) {
                if (tok.size() != n) {
                    throw std::invalid_argument("'" + key + "' expects " + std::to_string(n - 1) + " fields");
                }
            };
            if (key == "pattern") {
                need(2);
                p.name = tok[1];
            } else if (key == "vertices") {
                need(2);
                p.graph = Graph(parse_int(tok[1]));
                have_vertices = true;
            } else if (key == "edge") {
                need(3);
                if (!have_vertices) {
                    throw std::invalid_argument("edge before vertices");
                }
                p.graph.add_edge(parse_int(tok[1]), parse_int(tok[2]));
            } else if (key == "inputs" || key == "outputs") {
                auto &dst = key == "inputs" ? p.inputs : p.outputs;
                for (std::size_t i = 1; i < tok.size(); ++i) {
                    dst.push_back(parse_int(tok[i]));
                }
            } else if (key == "measure") {
                need(5);
                p.measurements.push_back({parse_int(tok[1]), AngleSpec{parse_double(tok[2]), parity_from_text(tok[3]),
                                                                        parity_from_text(tok[4])}});
            } else if (key == "correct") {
                need(4);
                Byproduct op;
                if (tok[2] == "X") {
                    op = Byproduct::X;
                } else if (tok[2] == "Z") {
                    op = Byproduct::Z;
                } else if (tok[2] == "H") {
                    op = Byproduct::H;
                } else {
                    throw std::invalid_argument("unknown byproduct '" + tok[2] + "'");
                }
                p.corrections.push_back({parse_int(tok[1]), op, parity_from_text(tok[3])});
            } else {
                throw std::invalid_argument("unknown record '" + key + "'");
            }
        } catch (const std::exception &e) {
            throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    p.validate();
    return p;
}

}  // namespace qmetro
