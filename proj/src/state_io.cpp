// Copyright 2026 The discordlab Authors
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

#include "discordlab/state_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace discordlab {

using nlohmann::json;

json state_to_json(const DensityMatrix &rho) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < 4; ++r) {
        json re_row = json::array();
        json im_row = json::array();
        for (std::size_t c = 0; c < 4; ++c) {
            re_row.push_back(rho.mat()(r, c).real());
            im_row.push_back(rho.mat()(r, c).imag());
        }
        re.push_back(std::move(re_row));
        im.push_back(std::move(im_row));
    }
    return json{{"dims", {2, 2}},
                {"basis", kBasisDescription},
                {"re", std::move(re)},
                {"im", std::move(im)},
                {"label", rho.label()}};
}

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorKind::Parse, what);
}

std::vector<std::vector<double>> real_rows(const json &doc, const char *key) {
    if (!doc.contains(key)) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    const json &rows = doc.at(key);
    if (!rows.is_array()) {
        parse_fail(std::string("field '") + key + "' is not an array");
    }
    std::vector<std::vector<double>> out;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const json &row = rows[r];
        if (!row.is_array()) {
            parse_fail(std::string("field '") + key + "' row " +
                       std::to_string(r) + " is not an array");
        }
        std::vector<double> vals;
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (!row[c].is_number()) {
                parse_fail(std::string("field '") + key + "' entry [" +
                           std::to_string(r) + "][" + std::to_string(c) +
                           "] is not a number");
            }
            vals.push_back(row[c].get<double>());
        }
        out.push_back(std::move(vals));
    }
    return out;
}

} // namespace

DensityMatrix state_from_json(const json &doc) {
    if (!doc.is_object()) {
        parse_fail("state document is not an object");
    }
    if (doc.contains("dims") && doc.at("dims") != json{2, 2}) {
        throw Error(ErrorKind::InvalidDimension,
                    "field 'dims' must be [2, 2], got " + doc.at("dims").dump());
    }
    if (doc.contains("basis") &&
        (!doc.at("basis").is_string() ||
         doc.at("basis").get<std::string>() != kBasisDescription)) {
        parse_fail(std::string("field 'basis' must be \"") +
                   kBasisDescription + "\"");
    }
    const auto re = real_rows(doc, "re");
    const auto im = real_rows(doc, "im");
    if (re.size() != im.size()) {
        throw Error(ErrorKind::InvalidDimension,
                    "fields 're' and 'im' differ in row count");
    }
    std::vector<std::vector<cplx>> rows(re.size());
    for (std::size_t r = 0; r < re.size(); ++r) {
        if (re[r].size() != im[r].size()) {
            throw Error(ErrorKind::InvalidDimension,
                        "fields 're' and 'im' differ in row " +
                            std::to_string(r));
        }
        for (std::size_t c = 0; c < re[r].size(); ++c) {
            rows[r].emplace_back(re[r][c], im[r][c]);
        }
    }
    std::string label;
    if (doc.contains("label") && doc.at("label").is_string()) {
        label = doc.at("label").get<std::string>();
    }
    return DensityMatrix(matrix_from_rows<4>(rows), std::move(label));
}

DensityMatrix read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::Io, "cannot open " + path.string());
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
    }
    return state_from_json(doc);
}

void write_state_file(const std::filesystem::path &path,
                      const DensityMatrix &rho) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorKind::Io, "cannot write " + path.string());
    }
    out << state_to_json(rho).dump(2) << '\n';
}

} // namespace discordlab
