#include "hurwitz/io.hpp"

#include "hurwitz/error.hpp"
#include "hurwitz/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hurwitz {

namespace {

Json parse_json(std::string_view text, ErrorCode code, const std::string& what)
{
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const Json::parse_error& e) {
        std::size_t line = 1;
        std::size_t column = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw Error(code, what + ": invalid JSON at line " + std::to_string(line) + ", column " +
                              std::to_string(column));
    }
}

Rational rational_field(const Json& j, const std::string& field, ErrorCode code)
{
    if (j.is_number_integer())
        return Rational(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const Error&) {
        }
    }
    throw Error(code, field + ": expected an integer or a \"p/q\" string");
}

}  // namespace

PointConfiguration parse_config(std::string_view text)
{
    const Json j = parse_json(text, ErrorCode::BadConfig, "configuration");
    if (!j.is_object())
        throw Error(ErrorCode::BadConfig, "configuration: expected a JSON object");
    std::string name;
    if (j.contains("name")) {
        if (!j["name"].is_string())
            throw Error(ErrorCode::BadConfig, "name: expected a string");
        name = j["name"].get<std::string>();
    }
    if (!j.contains("points"))
        throw Error(ErrorCode::BadConfig, "points: missing field");
    const Json& pts = j["points"];
    if (!pts.is_array() || pts.empty())
        throw Error(ErrorCode::BadConfig, "points: expected a nonempty array");
    std::vector<IntVector> points;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const std::string field = "points[" + std::to_string(i) + "]";
        if (!pts[i].is_array() || pts[i].empty())
            throw Error(ErrorCode::BadConfig, field + ": expected a nonempty array of integers");
        IntVector p;
        for (std::size_t k = 0; k < pts[i].size(); ++k) {
            const Json& c = pts[i][k];
            if (!c.is_number_integer())
                throw Error(ErrorCode::BadConfig, field + "[" + std::to_string(k) + "]: expected an integer");
            p.push_back(c.get<Int>());
        }
        if (!points.empty() && p.size() != points.front().size())
            throw Error(ErrorCode::BadConfig, field + ": dimension " + std::to_string(p.size()) + " differs from " +
                                                  std::to_string(points.front().size()));
        for (std::size_t prev = 0; prev < points.size(); ++prev)
            if (points[prev] == p)
                throw Error(ErrorCode::BadConfig,
                            field + ": duplicate of points[" + std::to_string(prev) + "]");
        points.push_back(std::move(p));
    }
    return PointConfiguration(std::move(points), std::move(name));
}

PointConfiguration load_config(const std::string& source)
{
    for (const auto& f : fixtures())
        if (f.name == source)
            return f.config();
    if (!std::filesystem::exists(source))
        throw Error(ErrorCode::BadConfig, "'" + source + "' is neither a fixture name nor a file");
    return parse_config(read_file(source));
}

PLFunction parse_pl_function(std::string_view text, const PointConfiguration& config)
{
    const Json j = parse_json(text, ErrorCode::InvalidArgument, "function");
    if (!j.is_object() || (j.contains("heights") == j.contains("affine")))
        throw Error(ErrorCode::InvalidArgument, "function: expected exactly one of \"heights\" or \"affine\"");
    if (j.contains("heights")) {
        const Json& h = j["heights"];
        if (!h.is_object())
            throw Error(ErrorCode::InvalidArgument, "heights: expected an object keyed by label");
        RationalVector heights(config.size());
        std::vector<bool> seen(config.size(), false);
        for (const auto& [key, value] : h.items()) {
            std::size_t label = 0;
            try {
                std::size_t used = 0;
                label = std::stoul(key, &used);
                if (used != key.size())
                    label = 0;
            } catch (const std::exception&) {
                label = 0;
            }
            if (label < 1 || label > config.size())
                throw Error(ErrorCode::InvalidArgument, "heights: '" + key + "' is not a label");
            heights[label - 1] = rational_field(value, "heights." + key, ErrorCode::InvalidArgument);
            seen[label - 1] = true;
        }
        for (std::size_t i = 0; i < seen.size(); ++i)
            if (!seen[i])
                throw Error(ErrorCode::InvalidArgument, "heights: missing label " + std::to_string(i + 1));
        return PLFunction::from_heights(std::move(heights));
    }
    const Json& a = j["affine"];
    if (!a.is_array() || a.empty())
        throw Error(ErrorCode::InvalidArgument, "affine: expected a nonempty array");
    std::vector<AffinePiece> pieces;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const std::string field = "affine[" + std::to_string(i) + "]";
        if (!a[i].is_array() || a[i].size() != config.dim() + 1)
            throw Error(ErrorCode::InvalidArgument,
                        field + ": expected " + std::to_string(config.dim() + 1) + " coefficients");
        AffinePiece p;
        for (std::size_t k = 0; k < config.dim(); ++k)
            p.slope.push_back(rational_field(a[i][k], field, ErrorCode::InvalidArgument));
        p.constant = rational_field(a[i][config.dim()], field, ErrorCode::InvalidArgument);
        pieces.push_back(std::move(p));
    }
    return PLFunction::from_affine(std::move(pieces));
}

Json to_json(const Rational& value)
{
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
        return q.get_num().get_si();
    return to_string(q);
}

Json to_json(const IntVector& v)
{
    Json out = Json::array();
    for (auto x : v)
        out.push_back(x);
    return out;
}

Json to_json(const std::vector<IntVector>& vs)
{
    Json out = Json::array();
    for (const auto& v : vs)
        out.push_back(to_json(v));
    return out;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

namespace {

bool flat(const Json& j)
{
    return j.is_array() && std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
}

void write(std::string& out, const Json& j, std::size_t indent)
{
    const std::string pad(indent + 2, ' ');
    if (flat(j) || !j.is_structured() || j.empty()) {
        out += j.dump();
        return;
    }
    out += j.is_object() ? "{\n" : "[\n";
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first)
            out += ",\n";
        first = false;
        out += pad;
        if (j.is_object())
            out += Json(it.key()).dump() + ": ";
        write(out, *it, indent + 2);
    }
    out += "\n" + std::string(indent, ' ') + (j.is_object() ? "}" : "]");
}

}  // namespace

std::string dump(const Json& j)
{
    std::string out;
    write(out, j, 0);
    return out + "\n";
}

}  // namespace hurwitz
