#include "k3aut/record.hpp"

#include "k3aut/error.hpp"

namespace k3aut {

using nlohmann::json;

namespace {

template <class T, class F>
json optional_to_json(const std::optional<T>& v, F&& f)
{
    return v ? f(*v) : json(nullptr);
}

template <class T, class F>
std::optional<T> optional_from_json(const json& j, const char* key, F&& f)
{
    if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
    return f(j.at(key));
}

void require(bool ok, std::string_view field, std::string_view what)
{
    if (!ok) throw Error(ErrorCode::InvalidArgument, std::string(field) + ": " + std::string(what));
}

json entropy_to_json(const EntropyRecord& e)
{
    return {{"value", e.value},
            {"trace", integer_to_json(e.trace)},
            {"determinant", integer_to_json(e.determinant)},
            {"discriminant", integer_to_json(e.discriminant)}};
}

EntropyRecord entropy_from_json(const json& j)
{
    require(j.is_object(), "entropy", "expected an object");
    return {j.at("value").get<std::string>(), integer_from_json(j.at("trace"), "entropy.trace"),
            integer_from_json(j.at("determinant"), "entropy.determinant"),
            integer_from_json(j.at("discriminant"), "entropy.discriminant")};
}

json input_to_json(const InputEcho& in)
{
    json j = json::object();
    auto put = [&](const char* key, const std::optional<Integer>& v) {
        if (v) j[key] = integer_to_json(*v);
    };
    put("a", in.a);
    put("b", in.b);
    put("c", in.c);
    put("deg", in.deg);
    put("genus", in.genus);
    if (in.raw) j["raw"] = *in.raw;
    return j;
}

InputEcho input_from_json(const json& j)
{
    require(j.is_object(), "input", "expected an object");
    InputEcho in;
    auto get = [&](const char* key) {
        return optional_from_json<Integer>(j, key, [&](const json& v) { return integer_from_json(v, key); });
    };
    in.a = get("a");
    in.b = get("b");
    in.c = get("c");
    in.deg = get("deg");
    in.genus = get("genus");
    if (j.contains("raw")) in.raw = j.at("raw").get<std::string>();
    return in;
}

} // namespace

const char* version_string() noexcept { return "1.0.0"; }

json integer_to_json(const Integer& n) { return to_string(n); }

Integer integer_from_json(const json& j, std::string_view field)
{
    if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
    require(j.is_string(), field, "expected an integer or a decimal string");
    return parse_integer(j.get<std::string>(), field);
}

json matrix_to_json(const Mat2& m)
{
    return json::array({json::array({integer_to_json(m.alpha), integer_to_json(m.beta)}),
                        json::array({integer_to_json(m.gamma), integer_to_json(m.delta)})});
}

Mat2 matrix_from_json(const json& j, std::string_view field)
{
    require(j.is_array() && j.size() == 2 && j[0].is_array() && j[0].size() == 2 && j[1].is_array() &&
                j[1].size() == 2,
            field, "expected [[alpha, beta], [gamma, delta]]");
    return {integer_from_json(j[0][0], field), integer_from_json(j[0][1], field), integer_from_json(j[1][0], field),
            integer_from_json(j[1][1], field)};
}

json to_json(const ClassificationRecord& r)
{
    json j;
    j["tool"] = r.tool;
    j["version"] = r.version;
    j["input"] = input_to_json(r.input);
    j["lattice"] = optional_to_json(r.lattice, [](const LatticeRecord& l) {
        return json{{"a", integer_to_json(l.a)},
                    {"b", integer_to_json(l.b)},
                    {"c", integer_to_json(l.c)},
                    {"basis", matrix_to_json(l.basis)}};
    });
    j["d"] = optional_to_json(r.d, integer_to_json);
    j["square"] = optional_to_json(r.square, [](bool b) { return json(b); });
    j["discriminant_group"] = optional_to_json(r.discriminant_group, [](const std::array<Integer, 2>& g) {
        return json::array({integer_to_json(g[0]), integer_to_json(g[1])});
    });
    j["variant"] = optional_to_json(r.variant, [](const std::string& s) { return json(s); });
    j["witness"] = optional_to_json(r.witness, [](const WitnessRecord& w) {
        return json{{"kind", w.kind},
                    {"class", json::array({integer_to_json(w.x), integer_to_json(w.y)})},
                    {"square", integer_to_json(w.square)}};
    });
    j["h"] = optional_to_json(r.h, matrix_to_json);
    j["generator"] = optional_to_json(r.generator, [](const GeneratorRecord& g) {
        return json{{"matrix", matrix_to_json(g.matrix)},
                    {"power", g.power},
                    {"epsilon", g.epsilon},
                    {"entropy", entropy_to_json(g.entropy)},
                    {"entropy_squared", optional_to_json(g.entropy_squared, entropy_to_json)}};
    });
    j["involutions"] = json::array();
    for (const auto& m : r.involutions) j["involutions"].push_back(matrix_to_json(m));
    j["sigma"] = optional_to_json(r.sigma, matrix_to_json);
    j["tau"] = optional_to_json(r.tau, matrix_to_json);
    j["caveats"] = r.caveats;
    j["error"] = optional_to_json(r.error, [](const ErrorRecord& e) {
        return json{{"code", e.code}, {"message", e.message}};
    });
    return j;
}

ClassificationRecord record_from_json(const json& j)
{
    require(j.is_object(), "record", "expected an object");
    ClassificationRecord r;
    r.tool = j.at("tool").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.input = input_from_json(j.at("input"));
    r.lattice = optional_from_json<LatticeRecord>(j, "lattice", [](const json& l) {
        return LatticeRecord{integer_from_json(l.at("a"), "lattice.a"), integer_from_json(l.at("b"), "lattice.b"),
                             integer_from_json(l.at("c"), "lattice.c"), matrix_from_json(l.at("basis"), "basis")};
    });
    r.d = optional_from_json<Integer>(j, "d", [](const json& v) { return integer_from_json(v, "d"); });
    r.square = optional_from_json<bool>(j, "square", [](const json& v) { return v.get<bool>(); });
    r.discriminant_group =
        optional_from_json<std::array<Integer, 2>>(j, "discriminant_group", [](const json& v) {
            require(v.is_array() && v.size() == 2, "discriminant_group", "expected two invariant factors");
            return std::array<Integer, 2>{integer_from_json(v[0], "discriminant_group"),
                                          integer_from_json(v[1], "discriminant_group")};
        });
    r.variant = optional_from_json<std::string>(j, "variant", [](const json& v) { return v.get<std::string>(); });
    r.witness = optional_from_json<WitnessRecord>(j, "witness", [](const json& w) {
        const json& cls = w.at("class");
        require(cls.is_array() && cls.size() == 2, "witness.class", "expected [x, y]");
        return WitnessRecord{w.at("kind").get<std::string>(), integer_from_json(cls[0], "witness.class"),
                             integer_from_json(cls[1], "witness.class"),
                             integer_from_json(w.at("square"), "witness.square")};
    });
    r.h = optional_from_json<Mat2>(j, "h", [](const json& v) { return matrix_from_json(v, "h"); });
    r.generator = optional_from_json<GeneratorRecord>(j, "generator", [](const json& g) {
        GeneratorRecord out;
        out.matrix = matrix_from_json(g.at("matrix"), "generator.matrix");
        out.power = g.at("power").get<long>();
        out.epsilon = g.at("epsilon").get<int>();
        out.entropy = entropy_from_json(g.at("entropy"));
        out.entropy_squared = optional_from_json<EntropyRecord>(g, "entropy_squared", entropy_from_json);
        return out;
    });
    for (const auto& m : j.at("involutions")) r.involutions.push_back(matrix_from_json(m, "involutions"));
    r.sigma = optional_from_json<Mat2>(j, "sigma", [](const json& v) { return matrix_from_json(v, "sigma"); });
    r.tau = optional_from_json<Mat2>(j, "tau", [](const json& v) { return matrix_from_json(v, "tau"); });
    r.caveats = j.at("caveats").get<std::vector<std::string>>();
    r.error = optional_from_json<ErrorRecord>(j, "error", [](const json& e) {
        return ErrorRecord{e.at("code").get<std::string>(), e.at("message").get<std::string>()};
    });
    return r;
}

} // namespace k3aut
