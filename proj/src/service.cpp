#include "k3aut/service.hpp"

#include "k3aut/error.hpp"

#include <utility>

namespace k3aut {

using nlohmann::json;

namespace {

std::pair<Integer, Integer> apply(const Mat2& m, const Integer& x, const Integer& y)
{
    return {m.alpha * x + m.beta * y, m.gamma * x + m.delta * y};
}

json pair_json(const Integer& x, const Integer& y) { return json::array({integer_to_json(x), integer_to_json(y)}); }

json solution_json(const PellSolution& s) { return pair_json(s.u, s.v); }

void fill_lattice(ClassificationRecord& r, const Rank2Lattice& l)
{
    r.lattice = LatticeRecord{l.a(), l.b(), l.c(), l.basis()};
    r.d = l.d();
    r.square = l.square_discriminant();
    const DiscGroup g = disc_group_snf(l);
    r.discriminant_group = std::array<Integer, 2>{g.d1, g.d2};
}

void fill_classification(ClassificationRecord& r, const Rank2Lattice& l, const AutClassification& cl, int digits)
{
    r.variant = to_string(cl.variant);
    if (cl.witness) {
        const auto [x, y] = apply(l.basis(), cl.witness->divisor.x, cl.witness->divisor.y);
        const char* kind =
            cl.witness->kind == FiniteWitness::Kind::SquareDiscriminant ? "square-discriminant" : "minus-two-class";
        r.witness = WitnessRecord{kind, x, y, cl.witness->divisor.square};
    }
    if (!cl.report) return;
    const GeneratorReport& rep = *cl.report;
    r.h = l.to_input_basis(rep.h);
    GeneratorRecord g;
    g.matrix = l.to_input_basis(rep.generator);
    g.power = rep.k;
    g.epsilon = rep.epsilon;
    g.entropy = entropy_record(rep.generator, digits);
    if (rep.epsilon == -1) g.entropy_squared = entropy_record(rep.generator * rep.generator, digits);
    r.generator = std::move(g);
    if (cl.pair) {
        r.sigma = l.to_input_basis(cl.pair->sigma);
        r.tau = l.to_input_basis(cl.pair->tau);
        r.involutions = {*r.sigma, *r.tau};
    }
    r.caveats.push_back("involution-search-relative-completeness");
    if (abs(l.c()) != 1) r.caveats.push_back("h-from-scaled-conic");
}

std::string decimal(const Rational& q, int digits) { return Real(q).to_string(digits); }

} // namespace

EntropyRecord entropy_record(const Mat2& m, int digits)
{
    const Integer t = m.trace();
    const Integer det = m.det();
    return {entropy(m).to_string(digits), t, det, t * t - 4 * det};
}

ClassificationRecord classify_record(const Integer& a, const Integer& b, const Integer& c, int digits)
{
    ClassificationRecord r;
    r.input.a = a;
    r.input.b = b;
    r.input.c = c;
    const Rank2Lattice l = Rank2Lattice::make(a, b, c);
    fill_lattice(r, l);
    fill_classification(r, l, classify(l), digits);
    return r;
}

ClassificationRecord quartic_record(const Integer& degree, const Integer& genus, int digits)
{
    const QuarticLattice q = lattice_from_quartic(degree, genus);
    ClassificationRecord r;
    if (q.lattice) {
        r = classify_record(q.lattice->a(), q.lattice->b(), q.lattice->c(), digits);
    } else {
        r.d = 0;
        r.square = true;
        r.variant = "degenerate";
    }
    r.input = InputEcho{};
    r.input.deg = degree;
    r.input.genus = genus;
    return r;
}

ClassificationRecord error_record(InputEcho input, const std::string& code, const std::string& message)
{
    ClassificationRecord r;
    r.input = std::move(input);
    r.error = ErrorRecord{code, message};
    return r;
}

ClassificationRecord record_from_request_line(std::string_view line, int digits)
{
    InputEcho raw;
    raw.raw = std::string(line);
    try {
        if (line.find_first_not_of(" \t\r") == std::string_view::npos)
            throw Error(ErrorCode::InvalidArgument, "empty request line");
        const json j = json::parse(line);
        if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "request must be a JSON object");
        const bool abc = j.contains("a") || j.contains("b") || j.contains("c");
        const bool quartic = j.contains("deg") || j.contains("genus");
        if (abc == quartic)
            throw Error(ErrorCode::InvalidArgument, "request needs exactly one of (a, b, c) or (deg, genus)");
        auto field = [&](const char* key) {
            if (!j.contains(key)) throw Error(ErrorCode::InvalidArgument, std::string(key) + ": missing");
            return integer_from_json(j.at(key), key);
        };
        if (abc) return classify_record(field("a"), field("b"), field("c"), digits);
        return quartic_record(field("deg"), field("genus"), digits);
    } catch (const Error& e) {
        return error_record(std::move(raw), error_code_name(e.code()), e.what());
    } catch (const json::exception& e) {
        return error_record(std::move(raw), error_code_name(ErrorCode::InvalidArgument),
                            std::string("malformed JSON: ") + e.what());
    } catch (const std::bad_alloc&) {
        throw;
    } catch (const std::exception& e) {
        return error_record(std::move(raw), error_code_name(ErrorCode::Internal), e.what());
    }
}

json pell_json(const Integer& d, const Integer& m, const std::optional<Integer>& all_below)
{
    if (d <= 0) throw Error(ErrorCode::InvalidArgument, "d must be positive, got " + to_string(d));
    json j{{"d", integer_to_json(d)}, {"m", integer_to_json(m)}};
    if (is_square(d) && m == 1) {
        j["trivial_only"] = true;
        j["unit"] = nullptr;
        j["negative_unit"] = nullptr;
        j["pell4"] = nullptr;
        j["fundamental"] = nullptr;
        j["orbits"] = json::array({pair_json(1, 0)});
        if (all_below) {
            j["all_below"] = integer_to_json(*all_below);
            j["solutions"] = json::array({pair_json(-1, 0), pair_json(1, 0)});
        }
        return j;
    }
    const OrbitSet orbits = general_pell_orbits(d, m);
    j["trivial_only"] = false;
    j["unit"] = solution_json(orbits.unit);
    const auto neg = pell_minus1_fundamental(d);
    j["negative_unit"] = neg ? solution_json(*neg) : json(nullptr);
    j["pell4"] = solution_json(pell4_fundamental(d));
    const auto fund = min_positive_solution(orbits);
    j["fundamental"] = fund ? solution_json(*fund) : json(nullptr);
    j["orbits"] = json::array();
    for (const auto& s : orbits.representatives) j["orbits"].push_back(solution_json(s));
    if (all_below) {
        j["all_below"] = integer_to_json(*all_below);
        j["solutions"] = json::array();
        for (const auto& s : solutions_below(orbits, *all_below)) j["solutions"].push_back(solution_json(s));
    }
    return j;
}

json represent_json(const Integer& a, const Integer& b, const Integer& c, const Integer& k)
{
    const Rank2Lattice l = Rank2Lattice::make(a, b, c);
    json j{{"d", integer_to_json(l.d())}, {"k", integer_to_json(k)}, {"square", integer_to_json(2 * k)}};
    j["classes"] = json::array();
    for (const auto& cls : represent(l, k)) {
        const auto [x, y] = apply(l.basis(), cls.x, cls.y);
        j["classes"].push_back(pair_json(x, y));
    }
    return j;
}

json orbit_json(const Integer& a, const Integer& b, const Integer& c, const Integer& x0, const Integer& y0,
                long steps, int digits)
{
    const Rank2Lattice l = Rank2Lattice::make(a, b, c);
    const Mat2 h = build_h(l);
    const Mat2& p = l.basis();
    const auto [nx, ny] = apply(p.inverse(), x0, y0);
    const auto points = orbit_ratio_sequence(l, nx, ny, h, steps);

    // attracting root of the normalized form, carried to input coordinates
    const int sign = attracting_root_sign(l, h);
    const Real root = (Real(Integer(-l.b())) + Real(Integer(sign)) * sqrt(Real(l.d()))) / Real(Integer(2 * l.a()));
    const Real num = Real(p.alpha) * root + Real(p.beta);
    const Real den = Real(p.gamma) * root + Real(p.delta);

    json j{{"d", integer_to_json(l.d())}, {"matrix", matrix_to_json(l.to_input_basis(h))}};
    j["limit"] = (num / den).to_string(digits);
    j["rows"] = json::array();
    for (const auto& pt : points) {
        const auto [x, y] = apply(p, pt.x, pt.y);
        json row{{"n", pt.n}, {"x", integer_to_json(x)}, {"y", integer_to_json(y)},
                 {"square", integer_to_json(pt.square)}};
        if (y != 0) {
            Rational r(x, y);
            r.canonicalize();
            const Rational res = abs(a * r * r + b * r + c);
            row["ratio"] = decimal(r, digits);
            row["residual"] = decimal(res, digits);
        } else {
            row["ratio"] = nullptr;
            row["residual"] = nullptr;
        }
        j["rows"].push_back(std::move(row));
    }
    return j;
}

json entropy_json(const Integer& a, const Integer& b, const Integer& c, const std::optional<Mat2>& matrix,
                  int digits)
{
    const Rank2Lattice l = Rank2Lattice::make(a, b, c);
    auto entry = [&](const Mat2& normalized) {
        const EntropyRecord e = entropy_record(normalized, digits);
        return json{{"matrix", matrix_to_json(l.to_input_basis(normalized))},
                    {"value", e.value},
                    {"trace", integer_to_json(e.trace)},
                    {"determinant", integer_to_json(e.determinant)},
                    {"discriminant", integer_to_json(e.discriminant)}};
    };
    json j{{"d", integer_to_json(l.d())}};
    if (matrix) {
        const Mat2& p = l.basis();
        const Mat2 m = p.inverse() * *matrix * p;
        if (!is_isometry(l, m)) throw Error(ErrorCode::NotIsometry, to_string(*matrix) + " is not an isometry");
        j["isometry"] = entry(m);
        return j;
    }
    const AutClassification cl = classify(l);
    j["variant"] = to_string(cl.variant);
    j["h"] = l.square_discriminant() ? json(nullptr) : entry(cl.report ? cl.report->h : build_h(l));
    j["generator"] = cl.report ? entry(cl.report->generator) : json(nullptr);
    j["generator_squared"] = cl.report && cl.report->epsilon == -1
                                 ? entry(cl.report->generator * cl.report->generator)
                                 : json(nullptr);
    j["involutions"] = json::array();
    if (cl.pair)
        for (const Mat2* m : {&cl.pair->sigma, &cl.pair->tau}) j["involutions"].push_back(entry(*m));
    return j;
}

} // namespace k3aut
