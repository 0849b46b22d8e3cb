#include "k3aut/k3aut.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <iostream>
#include <iomanip>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_internal = 1;
constexpr int exit_domain = 2;

struct Failure {
    int exit_code;
    std::string message;
};

std::string last_error()
{
    size_t len = 0;
    k3aut_last_error(nullptr, &len);
    std::string s(len, '\0');
    k3aut_last_error(s.data(), &len);
    s.resize(len ? len - 1 : 0);
    return s;
}

int exit_code_of(int status)
{
    if (status == K3AUT_OK) return exit_ok;
    return k3aut_status_is_domain_error(status) ? exit_domain : exit_internal;
}

// Owns a result handle and exposes its JSON.
class Result {
public:
    Result() = default;
    Result(const Result&) = delete;
    Result& operator=(const Result&) = delete;
    ~Result() { k3aut_result_destroy(r_); }

    k3aut_result_t* out() { return &r_; }

    std::string text() const
    {
        if (!r_) return {};
        size_t len = 0;
        k3aut_result_json(r_, nullptr, &len);
        std::string s(len, '\0');
        if (k3aut_result_json(r_, s.data(), &len) != K3AUT_OK) throw Failure{exit_internal, last_error()};
        s.resize(len - 1);
        return s;
    }

    int variant() const
    {
        int v = K3AUT_VARIANT_NONE;
        if (r_) k3aut_result_variant(r_, &v);
        return v;
    }

private:
    k3aut_result_t r_ = nullptr;
};

// Throws Failure unless status is OK, preferring the message stored in the result.
void check(int status, const Result* result = nullptr)
{
    if (status == K3AUT_OK) return;
    std::string message = last_error();
    if (result) {
        const std::string text = result->text();
        if (!text.empty()) {
            const json j = json::parse(text);
            if (j.contains("error") && j["error"].is_object()) message = j["error"]["message"].get<std::string>();
        }
    }
    throw Failure{exit_code_of(status), message};
}

class Lattice {
public:
    Lattice(const std::string& a, const std::string& b, const std::string& c)
    {
        check(k3aut_lattice_create(&l_, a.c_str(), b.c_str(), c.c_str()));
    }
    Lattice(const Lattice&) = delete;
    Lattice& operator=(const Lattice&) = delete;
    ~Lattice() { k3aut_lattice_destroy(l_); }

    k3aut_lattice_t get() const { return l_; }

private:
    k3aut_lattice_t l_ = nullptr;
};

std::string str(const json& j)
{
    if (j.is_null()) return "-";
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

std::string vec(const json& j) { return "(" + str(j[0]) + "," + str(j[1]) + ")"; }

std::string mat(const json& j)
{
    if (j.is_null()) return "-";
    return "(" + vec(j[0]) + "," + vec(j[1]) + ")";
}

std::string signed_int(int e) { return e > 0 ? "+" + std::to_string(e) : std::to_string(e); }

void row(std::ostream& out, const std::string& key, const std::string& value)
{
    out << std::left << std::setw(14) << key << value << "\n";
}

enum class Section { All, Generator, Involutions };

void print_record(std::ostream& out, const json& r, Section section)
{
    const json& in = r["input"];
    if (in.contains("deg")) row(out, "curve", "degree " + str(in["deg"]) + ", genus " + str(in["genus"]));
    if (!r["lattice"].is_null()) {
        const json& l = r["lattice"];
        row(out, "lattice", "(" + str(l["a"]) + ", " + str(l["b"]) + ", " + str(l["c"]) + ")");
        if (l["basis"] != json::parse(R"([["1","0"],["0","1"]])")) row(out, "basis", mat(l["basis"]));
    }
    row(out, "d", str(r["d"]) + (r["square"] == true ? " (square)" : ""));
    if (!r["discriminant_group"].is_null())
        row(out, "A(L)", "Z/" + str(r["discriminant_group"][0]) + " x Z/" + str(r["discriminant_group"][1]));
    row(out, "variant", str(r["variant"]));
    if (!r["witness"].is_null()) {
        const json& w = r["witness"];
        row(out, "witness", str(w["kind"]) + " " + vec(w["class"]) + ", square " + str(w["square"]));
    }
    if (section != Section::Involutions && !r["generator"].is_null()) {
        const json& g = r["generator"];
        row(out, "h", mat(r["h"]));
        row(out, "generator", "h^" + str(g["power"]) + " = " + mat(g["matrix"]));
        row(out, "epsilon", signed_int(g["epsilon"].get<int>()));
        row(out, "entropy", str(g["entropy"]["value"]) + "  (trace " + str(g["entropy"]["trace"]) + ")");
        if (!g["entropy_squared"].is_null()) row(out, "entropy g^2", str(g["entropy_squared"]["value"]));
    }
    if (section != Section::Generator && r["variant"] != "finite" && r["variant"] != "degenerate") {
        if (r["involutions"].empty()) row(out, "involutions", "none");
        if (!r["sigma"].is_null()) {
            row(out, "sigma", mat(r["sigma"]));
            row(out, "tau", mat(r["tau"]));
        }
    }
}

void print_pell(std::ostream& out, const json& j)
{
    row(out, "equation", "u^2 - " + str(j["d"]) + " v^2 = " + str(j["m"]));
    if (j["trivial_only"] == true) {
        out << "trivial only: (±1,0)\n";
        return;
    }
    row(out, "unit", vec(j["unit"]));
    row(out, "unit (-1)", j["negative_unit"].is_null() ? "none" : vec(j["negative_unit"]));
    row(out, "pell-4", vec(j["pell4"]));
    if (j["orbits"].empty()) {
        out << "no solutions\n";
        return;
    }
    if (!j["fundamental"].is_null()) row(out, "fundamental", vec(j["fundamental"]));
    std::string reps;
    for (const auto& s : j["orbits"]) reps += (reps.empty() ? "" : " ") + vec(s);
    row(out, "orbits", reps);
    if (j.contains("solutions")) {
        out << "solutions with |v| <= " << str(j["all_below"]) << ":\n";
        for (const auto& s : j["solutions"]) out << "  " << vec(s) << "\n";
    }
}

void print_orbit(std::ostream& out, const json& j, bool csv)
{
    if (csv) {
        out << "n,x,y,ratio,residual\n";
        for (const auto& r : j["rows"])
            out << r["n"].get<long>() << "," << str(r["x"]) << "," << str(r["y"]) << ","
                << (r["ratio"].is_null() ? "" : str(r["ratio"])) << ","
                << (r["residual"].is_null() ? "" : str(r["residual"])) << "\n";
        return;
    }
    row(out, "matrix", mat(j["matrix"]));
    row(out, "limit", str(j["limit"]));
    out << std::left << std::setw(6) << "n" << std::setw(24) << "x" << std::setw(24) << "y" << std::setw(22)
        << "ratio"
        << "residual\n";
    for (const auto& r : j["rows"])
        out << std::setw(6) << r["n"].get<long>() << std::setw(24) << str(r["x"]) << std::setw(24) << str(r["y"])
            << std::setw(22) << str(r["ratio"]) << str(r["residual"]) << "\n";
}

void print_entropy(std::ostream& out, const json& j)
{
    auto line = [&](const std::string& key, const json& e) {
        if (e.is_null()) return;
        row(out, key, str(e["value"]) + "  " + mat(e["matrix"]) + "  trace " + str(e["trace"]) + ", det " +
                          str(e["determinant"]) + ", disc " + str(e["discriminant"]));
    };
    if (j.contains("isometry")) {
        line("entropy", j["isometry"]);
        return;
    }
    row(out, "variant", str(j["variant"]));
    line("h", j["h"]);
    line("generator", j["generator"]);
    line("generator^2", j["generator_squared"]);
    for (const auto& e : j["involutions"]) line("involution", e);
}

void print_represent(std::ostream& out, const json& j)
{
    row(out, "square", str(j["square"]));
    if (j["classes"].empty()) {
        out << "no classes\n";
        return;
    }
    for (const auto& c : j["classes"]) out << vec(c) << "\n";
}

struct Output {
    std::string path;
    std::ofstream file;

    std::ostream& stream()
    {
        if (path.empty()) return std::cout;
        if (!file.is_open()) {
            file.open(path);
            if (!file) throw Failure{exit_internal, "cannot open " + path + " for writing"};
        }
        return file;
    }
};

struct LatticeArgs {
    std::string a, b, c;

    void add(CLI::App* cmd)
    {
        cmd->add_option("-a", a, "coefficient a of a x^2 + b x y + c y^2")->required();
        cmd->add_option("-b", b, "coefficient b")->required();
        cmd->add_option("-c", c, "coefficient c")->required();
    }
};

std::vector<std::string> read_lines(const std::string& path)
{
    std::vector<std::string> lines;
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file) throw Failure{exit_internal, "cannot open " + path};
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) lines.push_back(line);
    if (in->bad()) throw Failure{exit_internal, "read error on " + path};
    return lines;
}

int run_batch(const std::string& input, Output& output, int digits, unsigned threads)
{
    const std::vector<std::string> lines = read_lines(input);
    std::vector<std::string> records(lines.size());
    std::vector<int> variants(lines.size(), K3AUT_VARIANT_NONE);
    std::vector<int> statuses(lines.size(), K3AUT_OK);
    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::string failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        for (std::size_t i; (i = next++) < lines.size();) {
            Result r;
            statuses[i] = k3aut_batch_line(lines[i].c_str(), digits, r.out());
            try {
                records[i] = r.text();
            } catch (const Failure& f) {
                std::lock_guard lock(failure_mutex);
                failed = true;
                failure = f.message;
                return;
            }
            variants[i] = r.variant();
        }
    };
    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(lines.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failed) throw Failure{exit_internal, failure};

    std::ostream& out = output.stream();
    for (const auto& rec : records) out << rec << "\n";
    out.flush();
    if (!out) throw Failure{exit_internal, "write error"};

    std::map<int, std::size_t> counts;
    std::size_t errors = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        if (statuses[i] != K3AUT_OK) ++errors;
        else ++counts[variants[i]];
    }
    std::cerr << "records " << lines.size() << ": finite " << counts[K3AUT_VARIANT_FINITE] << ", cyclic "
              << counts[K3AUT_VARIANT_CYCLIC] << ", dihedral " << counts[K3AUT_VARIANT_DIHEDRAL] << ", degenerate "
              << counts[K3AUT_VARIANT_DEGENERATE] << ", errors " << errors << "\n";
    return exit_ok;
}

std::pair<std::string, std::string> split_pair(const std::string& s)
{
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw Failure{exit_domain, "--start: expected x,y but got '" + s + "'"};
    return {s.substr(0, comma), s.substr(comma + 1)};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Automorphism groups of K3 surfaces with Picard lattice of rank 2"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(k3aut_version()));

    bool as_json = false;
    int digits = 12;
    Output output;

    LatticeArgs lat;
    auto* classify = app.add_subcommand("classify", "classify the automorphism group");
    auto* generator = app.add_subcommand("generator", "generator of the infinite part");
    auto* involutions = app.add_subcommand("involutions", "anti-symplectic involutions");
    for (auto* cmd : {classify, generator, involutions}) lat.add(cmd);

    std::string pell_d, norm = "1", all_below;
    auto* pell = app.add_subcommand("pell", "solve u^2 - d v^2 = m");
    pell->add_option("d", pell_d, "d > 0")->required();
    pell->add_option("--norm,-m", norm, "right-hand side m (default 1)");
    pell->add_option("--all-below", all_below, "also list every solution with |v| <= V");

    std::string k;
    auto* represent = app.add_subcommand("represent", "classes with D^2 = 2k");
    lat.add(represent);
    represent->add_option("-k", k, "half the square")->required();

    std::string start = "1,0";
    long steps = 10;
    bool csv = false;
    auto* orbit = app.add_subcommand("orbit", "orbit of a class under h and its ratios x/y");
    lat.add(orbit);
    orbit->add_option("--start", start, "seed class x,y (default 1,0)");
    orbit->add_option("-N", steps, "number of steps (default 10)")->check(CLI::NonNegativeNumber);
    orbit->add_flag("--csv", csv, "emit CSV");

    std::string matrix;
    auto* entropy = app.add_subcommand("entropy", "topological entropy of automorphisms");
    lat.add(entropy);
    entropy->add_option("--matrix", matrix, "one isometry alpha,beta,gamma,delta in the input basis");

    std::string deg, genus;
    auto* quartic = app.add_subcommand("quartic", "lattice of a curve on a smooth quartic");
    quartic->add_option("--deg", deg, "degree of the curve")->required();
    quartic->add_option("--genus", genus, "genus of the curve")->required();

    std::string input;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    auto* batch = app.add_subcommand("batch", "classify a JSONL file, one request per line");
    batch->add_option("input", input, "JSONL input path, - for stdin")->required();
    batch->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);

    for (auto* cmd : app.get_subcommands({})) {
        cmd->add_flag("--json", as_json, "print machine-readable JSON");
        cmd->add_option("--digits", digits, "significant digits for decimals")->check(CLI::Range(1, 1000));
        cmd->add_option("-o,--output", output.path, "write output to PATH instead of stdout");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_domain;
    }

    try {
        auto emit = [&](const std::string& text, auto&& human) {
            std::ostream& out = output.stream();
            if (as_json) out << json::parse(text).dump(2) << "\n";
            else human(out, json::parse(text));
            out.flush();
            if (!out) throw Failure{exit_internal, "write error"};
        };
        if (batch->parsed()) return run_batch(input, output, digits, threads);

        Result r;
        if (classify->parsed() || generator->parsed() || involutions->parsed()) {
            Lattice l(lat.a, lat.b, lat.c);
            check(k3aut_classify(l.get(), digits, r.out()), &r);
            const Section s = generator->parsed()     ? Section::Generator
                              : involutions->parsed() ? Section::Involutions
                                                      : Section::All;
            emit(r.text(), [&](std::ostream& out, const json& j) { print_record(out, j, s); });
        } else if (quartic->parsed()) {
            check(k3aut_quartic(deg.c_str(), genus.c_str(), digits, r.out()), &r);
            emit(r.text(), [&](std::ostream& out, const json& j) { print_record(out, j, Section::All); });
        } else if (pell->parsed()) {
            check(k3aut_pell(pell_d.c_str(), norm.c_str(), all_below.empty() ? nullptr : all_below.c_str(), r.out()),
                  &r);
            emit(r.text(), print_pell);
        } else if (represent->parsed()) {
            Lattice l(lat.a, lat.b, lat.c);
            check(k3aut_represent(l.get(), k.c_str(), r.out()), &r);
            emit(r.text(), print_represent);
        } else if (orbit->parsed()) {
            Lattice l(lat.a, lat.b, lat.c);
            const auto [x, y] = split_pair(start);
            check(k3aut_orbit(l.get(), x.c_str(), y.c_str(), steps, digits, r.out()), &r);
            emit(r.text(), [&](std::ostream& out, const json& j) { print_orbit(out, j, csv); });
        } else if (entropy->parsed()) {
            Lattice l(lat.a, lat.b, lat.c);
            check(k3aut_entropy(l.get(), matrix.empty() ? nullptr : matrix.c_str(), digits, r.out()), &r);
            emit(r.text(), print_entropy);
        }
        return exit_ok;
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << "\n";
        return f.exit_code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_internal;
    }
}
