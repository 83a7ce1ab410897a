#include "entm/state_json.hpp"

#include <fstream>

namespace entm {

nlohmann::json matrix_to_json(const Matrix4c& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (int i = 0; i < 4; ++i) {
        nlohmann::json re_row = nlohmann::json::array();
        nlohmann::json im_row = nlohmann::json::array();
        for (int j = 0; j < 4; ++j) {
            re_row.push_back(m(i, j).real());
            im_row.push_back(m(i, j).imag());
        }
        re.push_back(re_row);
        im.push_back(im_row);
    }
    return {{"re", re}, {"im", im}};
}

Matrix4c matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("re") || !j.contains("im")) {
        throw ParseError("state JSON must be an object with 're' and 'im' 4x4 arrays");
    }
    Matrix4c m;
    for (const char* key : {"re", "im"}) {
        const auto& part = j.at(key);
        if (!part.is_array() || part.size() != 4) {
            throw ParseError(std::string("'") + key + "' must be a 4x4 array");
        }
        for (int i = 0; i < 4; ++i) {
            const auto& row = part.at(i);
            if (!row.is_array() || row.size() != 4) {
                throw ParseError(std::string("'") + key + "' must be a 4x4 array");
            }
            for (int jj = 0; jj < 4; ++jj) {
                if (!row.at(jj).is_number()) {
                    throw ParseError("state entries must be numbers");
                }
                const double v = row.at(jj).get<double>();
                if (key[0] == 'r') {
                    m(i, jj) = complexd(v, 0.0);
                } else {
                    m(i, jj) += complexd(0.0, v);
                }
            }
        }
    }
    return m;
}

DensityMatrix density_from_json(const nlohmann::json& j) {
    return DensityMatrix(matrix_from_json(j));
}

DensityMatrix density_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open state file: " + path);
    }
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    return density_from_json(j);
}

FamilyPoint family_point_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
        throw ParseError("family JSON must be an object with a 'family' string");
    }
    FamilyPoint fp;
    fp.family = family_from_name(j.at("family").get<std::string>());
    if (j.contains("params")) {
        if (!j.at("params").is_object()) {
            throw ParseError("'params' must be an object of numbers");
        }
        for (const auto& [key, value] : j.at("params").items()) {
            if (!value.is_number()) {
                throw ParseError("family parameter '" + key + "' must be a number");
            }
            fp.params[key] = value.get<double>();
        }
    }
    return fp;
}

nlohmann::json family_point_to_json(const FamilyPoint& fp) {
    nlohmann::json params = nlohmann::json::object();
    for (const auto& [key, value] : fp.params) {
        params[key] = value;
    }
    return {{"family", family_name(fp.family)}, {"params", params}};
}

}  // namespace entm
