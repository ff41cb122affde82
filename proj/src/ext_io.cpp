#include "abp/ext_io.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

namespace abp {

namespace {

using nlohmann::json;

Matrix4 matrix_from(const json& j) {
    if (!j.contains("re") || !j.contains("im"))
        throw domain_error("extension JSON: matrix kinds need 're' and 'im' 4x4 arrays");
    Matrix4 m;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            m(r, c) = cplx(j["re"].at(r).at(c).get<double>(), j["im"].at(r).at(c).get<double>());
    return m;
}

}  // namespace

ExtensionParam ext_from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("extension JSON: ") + e.what());
    }
    const std::string kind = j.value("kind", "");
    if (kind == "friedrichs") return ExtensionParam::friedrichs();
    if (kind == "krein") return ExtensionParam::theta(Matrix4::Zero());
    if (kind == "theta") return ExtensionParam::theta(matrix_from(j));
    if (kind == "beta") return ExtensionParam::beta(matrix_from(j));
    throw domain_error("extension JSON: kind must be theta|beta|friedrichs|krein");
}

ExtensionParam ext_from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("extension JSON: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ext_from_json_text(ss.str());
}

std::string ext_to_json_text(const ExtensionParam& ext) {
    json j;
    if (ext.is_friedrichs()) {
        j["kind"] = "friedrichs";
    } else {
        j["kind"] = ext.kind() == ExtensionParam::Kind::theta ? "theta" : "beta";
        json re = json::array(), im = json::array();
        for (int r = 0; r < 4; ++r) {
            json rrow = json::array(), irow = json::array();
            for (int c = 0; c < 4; ++c) {
                rrow.push_back(ext.matrix()(r, c).real());
                irow.push_back(ext.matrix()(r, c).imag());
            }
            re.push_back(rrow);
            im.push_back(irow);
        }
        j["re"] = re;
        j["im"] = im;
    }
    return j.dump(2) + "\n";
}

}  // namespace abp
