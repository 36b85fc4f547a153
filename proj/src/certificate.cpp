#include "verlie/certificate.hpp"

namespace verlie {

Json certificate_base(const std::string& command, const Json& parameters, const Field& f) {
    Json c;
    c["schema"] = kCertificateSchema;
    c["library_version"] = kLibraryVersion;
    c["command"] = command;
    c["parameters"] = parameters;
    c["field"] = f.name();
    c["verdicts"] = Json::object();
    c["payload"] = Json::object();
    return c;
}

Json mat_to_json(const Mat& m) {
    Json rows = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(static_cast<int>(m(r, c)));
        rows.push_back(row);
    }
    return rows;
}

Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (FieldElem e : v) a.push_back(static_cast<int>(e));
    return a;
}

Json structure_to_json(const BracketStructure& l) {
    Json j;
    j["dim"] = l.dim();
    j["d"] = mat_to_json(l.d);
    Json c = Json::array();
    for (FieldElem e : l.c) c.push_back(static_cast<int>(e));
    j["tensor"] = c;
    return j;
}

std::string certificate_to_string(const Json& c) {
    return c.dump(2) + "\n";
}

}  // namespace verlie
