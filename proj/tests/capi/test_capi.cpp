#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "json.hpp"
#include "k3aut/k3aut.h"

#include <string>
#include <thread>
#include <vector>

using nlohmann::json;

namespace {

std::string result_text(k3aut_result_t r)
{
    size_t len = 0;
    REQUIRE(k3aut_result_json(r, nullptr, &len) == K3AUT_ERROR_INSUFFICIENT_BUFFER);
    std::string buf(len, '\0');
    REQUIRE(k3aut_result_json(r, buf.data(), &len) == K3AUT_OK);
    buf.resize(len - 1);
    return buf;
}

json result_json(k3aut_result_t r) { return json::parse(result_text(r)); }

k3aut_lattice_t lattice(const char* a, const char* b, const char* c)
{
    k3aut_lattice_t l = nullptr;
    REQUIRE(k3aut_lattice_create(&l, a, b, c) == K3AUT_OK);
    return l;
}

std::string last_error()
{
    size_t len = 0;
    k3aut_last_error(nullptr, &len);
    std::string buf(len, '\0');
    REQUIRE(k3aut_last_error(buf.data(), &len) == K3AUT_OK);
    buf.resize(len - 1);
    return buf;
}

} // namespace

TEST_SUITE("capi")
{
    TEST_CASE("version and status names")
    {
        CHECK(std::string(k3aut_version()) == "1.0.0");
        CHECK(std::string(k3aut_status_name(K3AUT_OK)) == "ok");
        CHECK(std::string(k3aut_status_name(K3AUT_ERROR_DEGENERATE)) == "degenerate");
        CHECK(std::string(k3aut_status_name(K3AUT_ERROR_INSUFFICIENT_BUFFER)) == "insufficient_buffer");
        CHECK(std::string(k3aut_status_name(-999)) == "unknown");
        CHECK(k3aut_status_is_domain_error(K3AUT_ERROR_DEGENERATE));
        CHECK(k3aut_status_is_domain_error(K3AUT_ERROR_NOT_REALIZABLE));
        CHECK(k3aut_status_is_domain_error(K3AUT_ERROR_SQUARE_INPUT));
        CHECK_FALSE(k3aut_status_is_domain_error(K3AUT_ERROR_INTERNAL));
        CHECK_FALSE(k3aut_status_is_domain_error(K3AUT_ERROR_BAD_HANDLE));
    }

    TEST_CASE("lattice handles")
    {
        k3aut_lattice_t l = nullptr;
        CHECK(k3aut_lattice_create(&l, "2", "4", "2") == K3AUT_ERROR_DEGENERATE);
        CHECK(l == nullptr);
        CHECK(last_error() == "degenerate: discriminant 0");
        CHECK(k3aut_lattice_create(&l, "2", "x", "2") == K3AUT_ERROR_INVALID_ARGUMENT);
        CHECK(last_error().find("b") != std::string::npos);
        CHECK(k3aut_lattice_create(&l, "2", nullptr, "2") == K3AUT_ERROR_INVALID_ARGUMENT);
        CHECK(k3aut_lattice_create(nullptr, "1", "4", "1") == K3AUT_ERROR_NULL_POINTER);

        l = lattice("123456789012345678901234567890", "1", "-1");
        size_t len = 4;
        char small[4];
        CHECK(k3aut_lattice_discriminant(l, small, &len) == K3AUT_ERROR_INSUFFICIENT_BUFFER);
        CHECK(len == 31);
        std::string d(len, '\0');
        CHECK(k3aut_lattice_discriminant(l, d.data(), &len) == K3AUT_OK);
        CHECK(std::string(d.c_str()) == "493827156049382715604938271561");
        CHECK(k3aut_lattice_discriminant(l, d.data(), nullptr) == K3AUT_ERROR_NULL_POINTER);
        CHECK(k3aut_lattice_destroy(l) == K3AUT_OK);
        CHECK(k3aut_lattice_destroy(nullptr) == K3AUT_OK);
    }

    TEST_CASE("wrong handle types are rejected")
    {
        k3aut_lattice_t l = lattice("1", "4", "1");
        k3aut_result_t r = nullptr;
        REQUIRE(k3aut_classify(l, 12, &r) == K3AUT_OK);
        size_t len = 0;
        CHECK(k3aut_result_json(reinterpret_cast<k3aut_result_t>(l), nullptr, &len) == K3AUT_ERROR_BAD_HANDLE);
        CHECK(k3aut_classify(reinterpret_cast<k3aut_lattice_t>(r), 12, &r) == K3AUT_ERROR_BAD_HANDLE);
        CHECK(k3aut_lattice_destroy(reinterpret_cast<k3aut_lattice_t>(r)) == K3AUT_ERROR_BAD_HANDLE);
        CHECK(k3aut_result_destroy(reinterpret_cast<k3aut_result_t>(l)) == K3AUT_ERROR_BAD_HANDLE);
        CHECK(k3aut_classify(nullptr, 12, &r) == K3AUT_ERROR_BAD_HANDLE);
        CHECK(k3aut_classify(l, 0, &r) == K3AUT_ERROR_INVALID_ARGUMENT);
        CHECK(k3aut_classify(l, 12, nullptr) == K3AUT_ERROR_NULL_POINTER);
        k3aut_result_destroy(r);
        k3aut_lattice_destroy(l);
    }

    TEST_CASE("classify through the C API")
    {
        k3aut_lattice_t l = lattice("2", "6", "2");
        k3aut_result_t r = nullptr;
        REQUIRE(k3aut_classify(l, 12, &r) == K3AUT_OK);
        int status = 1, variant = 0;
        CHECK(k3aut_result_status(r, &status) == K3AUT_OK);
        CHECK(status == K3AUT_OK);
        CHECK(k3aut_result_variant(r, &variant) == K3AUT_OK);
        CHECK(variant == K3AUT_VARIANT_CYCLIC);
        const json j = result_json(r);
        CHECK(j["generator"]["power"] == 3);
        CHECK(j["generator"]["epsilon"] == -1);
        k3aut_result_destroy(r);
        k3aut_lattice_destroy(l);

        l = lattice("1", "4", "1");
        REQUIRE(k3aut_classify(l, 12, &r) == K3AUT_OK);
        k3aut_result_variant(r, &variant);
        CHECK(variant == K3AUT_VARIANT_DIHEDRAL);
        CHECK(result_json(r)["sigma"] == json::parse(R"([["1","4"],["0","-1"]])"));
        k3aut_result_destroy(r);

        REQUIRE(k3aut_entropy(l, nullptr, 10, &r) == K3AUT_OK);
        CHECK(result_json(r)["h"]["value"] == "1.316957897");
        k3aut_result_destroy(r);
        CHECK(k3aut_entropy(l, "1,1,0,1", 10, &r) == K3AUT_ERROR_NOT_ISOMETRY);
        CHECK(result_json(r)["error"]["code"] == "not_isometry");
        k3aut_result_destroy(r);
        CHECK(k3aut_entropy(l, "1,1,0", 10, &r) == K3AUT_ERROR_INVALID_ARGUMENT);
        k3aut_result_destroy(r);

        REQUIRE(k3aut_represent(l, "-1", &r) == K3AUT_OK);
        CHECK(result_json(r)["classes"].empty());
        k3aut_result_destroy(r);
        CHECK(k3aut_represent(l, "0", &r) == K3AUT_ERROR_ZERO_K);
        k3aut_result_destroy(r);

        REQUIRE(k3aut_orbit(l, "1", "0", 3, 12, &r) == K3AUT_OK);
        CHECK(result_json(r)["rows"].size() == 4);
        k3aut_result_destroy(r);
        CHECK(k3aut_orbit(l, "0", "0", 3, 12, &r) == K3AUT_ERROR_ZERO_CLASS);
        k3aut_result_destroy(r);
        k3aut_lattice_destroy(l);
    }

    TEST_CASE("quartic and pell")
    {
        k3aut_result_t r = nullptr;
        CHECK(k3aut_quartic("5", "3", 12, &r) == K3AUT_ERROR_NOT_REALIZABLE);
        const json e = result_json(r);
        CHECK(e["error"]["code"] == "not_realizable");
        CHECK(e["input"]["deg"] == "5");
        k3aut_result_destroy(r);
        REQUIRE(k3aut_quartic("4", "3", 12, &r) == K3AUT_OK);
        int variant = 0;
        k3aut_result_variant(r, &variant);
        CHECK(variant == K3AUT_VARIANT_DEGENERATE);
        k3aut_result_destroy(r);

        REQUIRE(k3aut_pell("5", "4", nullptr, &r) == K3AUT_OK);
        CHECK(result_json(r)["fundamental"] == json::parse(R"(["3","1"])"));
        k3aut_result_destroy(r);
        CHECK(k3aut_pell("9", "2", nullptr, &r) == K3AUT_ERROR_SQUARE_INPUT);
        k3aut_result_destroy(r);
        REQUIRE(k3aut_pell("9", "1", nullptr, &r) == K3AUT_OK);
        CHECK(result_json(r)["trivial_only"] == true);
        k3aut_result_destroy(r);
    }

    TEST_CASE("batch lines from many threads")
    {
        std::vector<std::string> lines;
        for (int n = 3; n <= 30; ++n) lines.push_back(R"({"a":2,"b":)" + std::to_string(2 * n) + R"(,"c":2})");
        for (int n = 4; n <= 30; ++n) lines.push_back(R"({"a":1,"b":)" + std::to_string(n) + R"(,"c":1})");
        lines.push_back("{oops");
        lines.push_back(R"({"a":2,"b":4,"c":2})");
        std::vector<std::string> serial(lines.size()), parallel(lines.size());
        for (std::size_t i = 0; i < lines.size(); ++i) {
            k3aut_result_t r = nullptr;
            k3aut_batch_line(lines[i].c_str(), 12, &r);
            serial[i] = result_text(r);
            k3aut_result_destroy(r);
        }
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < 4; ++t)
            pool.emplace_back([&, t] {
                for (std::size_t i = t; i < lines.size(); i += 4) {
                    k3aut_result_t r = nullptr;
                    k3aut_batch_line(lines[i].c_str(), 12, &r);
                    size_t len = 0;
                    k3aut_result_json(r, nullptr, &len);
                    std::string buf(len, '\0');
                    k3aut_result_json(r, buf.data(), &len);
                    buf.resize(len - 1);
                    parallel[i] = buf;
                    k3aut_result_destroy(r);
                }
            });
        for (auto& th : pool) th.join();
        CHECK(serial == parallel);
        for (std::size_t i = 0; i < 28; ++i) CHECK(json::parse(serial[i])["variant"] == "cyclic");
        for (std::size_t i = 28; i < 55; ++i) CHECK(json::parse(serial[i])["variant"] == "dihedral");
        CHECK(json::parse(serial[55])["error"]["code"] == "invalid_argument");
        CHECK(json::parse(serial[56])["error"]["code"] == "degenerate");
    }
}
