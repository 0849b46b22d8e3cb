#include "k3aut/k3aut.h"

#include "k3aut/error.hpp"
#include "k3aut/service.hpp"

#include <cstdint>
#include <cstring>
#include <memory>
#include <new>
#include <string>

using k3aut::Error;
using k3aut::ErrorCode;
using nlohmann::json;

namespace {

constexpr std::uint32_t lattice_magic = 0x4b334c41;
constexpr std::uint32_t result_magic = 0x4b335245;

thread_local std::string last_error;

int status_of(ErrorCode code) { return -(static_cast<int>(code) + 1); }

int status_of_name(const std::string& name)
{
    for (int i = 0; i <= static_cast<int>(ErrorCode::Internal); ++i)
        if (name == k3aut::error_code_name(static_cast<ErrorCode>(i))) return status_of(static_cast<ErrorCode>(i));
    return K3AUT_ERROR_INTERNAL;
}

int fail(int status, std::string message)
{
    last_error = std::move(message);
    return status;
}

int write_text(const std::string& text, char* out, size_t* out_len)
{
    if (!out_len) return fail(K3AUT_ERROR_NULL_POINTER, "out_len is null");
    const size_t need = text.size() + 1;
    if (!out || *out_len < need) {
        *out_len = need;
        return K3AUT_ERROR_INSUFFICIENT_BUFFER;
    }
    std::memcpy(out, text.c_str(), need);
    *out_len = need;
    return K3AUT_OK;
}

int check_digits(int digits)
{
    if (digits < 1 || digits > 1000) return fail(K3AUT_ERROR_INVALID_ARGUMENT, "digits must be in [1, 1000]");
    return K3AUT_OK;
}

k3aut::Integer parse(const char* text, const char* field)
{
    if (!text) throw Error(ErrorCode::InvalidArgument, std::string(field) + ": missing");
    return k3aut::parse_integer(text, field);
}

} // namespace

struct k3aut_lattice_struct {
    std::uint32_t magic = lattice_magic;
    k3aut::Integer a, b, c;
    k3aut::Rank2Lattice lattice;
};

struct k3aut_result_struct {
    std::uint32_t magic = result_magic;
    int status = K3AUT_OK;
    int variant = K3AUT_VARIANT_NONE;
    std::string text;
};

namespace {

const k3aut_lattice_struct* get(k3aut_lattice_t l)
{
    return l && l->magic == lattice_magic ? l : nullptr;
}

const k3aut_result_struct* get(k3aut_result_t r)
{
    return r && r->magic == result_magic ? r : nullptr;
}

int variant_of(const std::optional<std::string>& v)
{
    if (!v) return K3AUT_VARIANT_NONE;
    if (*v == "finite") return K3AUT_VARIANT_FINITE;
    if (*v == "cyclic") return K3AUT_VARIANT_CYCLIC;
    if (*v == "dihedral") return K3AUT_VARIANT_DIHEDRAL;
    if (*v == "degenerate") return K3AUT_VARIANT_DEGENERATE;
    return K3AUT_VARIANT_NONE;
}

int emit(k3aut_result_t* result, int status, std::string text, int variant = K3AUT_VARIANT_NONE)
{
    auto r = std::make_unique<k3aut_result_struct>();
    r->status = status;
    r->variant = variant;
    r->text = std::move(text);
    *result = r.release();
    return status;
}

int emit_record(k3aut_result_t* result, const k3aut::ClassificationRecord& rec)
{
    int status = K3AUT_OK;
    if (rec.error) status = fail(status_of_name(rec.error->code), rec.error->message);
    return emit(result, status, k3aut::to_json(rec).dump(), variant_of(rec.variant));
}

json error_json(const std::string& code, const std::string& message)
{
    return {{"error", {{"code", code}, {"message", message}}}};
}

// Runs f, which returns a JSON document, and stores its outcome in *result.
template <class F>
int run_json(k3aut_result_t* result, F&& f)
{
    if (!result) return fail(K3AUT_ERROR_NULL_POINTER, "result is null");
    *result = nullptr;
    try {
        return emit(result, K3AUT_OK, f().dump());
    } catch (const Error& e) {
        const int s = fail(status_of(e.code()), e.what());
        return emit(result, s, error_json(k3aut::error_code_name(e.code()), e.what()).dump());
    } catch (const std::bad_alloc&) {
        return fail(K3AUT_ERROR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        const int s = fail(K3AUT_ERROR_INTERNAL, e.what());
        return emit(result, s, error_json("internal", e.what()).dump());
    }
}

// Same for operations producing a classification record; errors become error records.
template <class F>
int run_record(k3aut_result_t* result, k3aut::InputEcho echo, F&& f)
{
    if (!result) return fail(K3AUT_ERROR_NULL_POINTER, "result is null");
    *result = nullptr;
    try {
        return emit_record(result, f());
    } catch (const Error& e) {
        return emit_record(result, k3aut::error_record(std::move(echo), k3aut::error_code_name(e.code()), e.what()));
    } catch (const std::bad_alloc&) {
        return fail(K3AUT_ERROR_OUT_OF_MEMORY, "out of memory");
    } catch (const std::exception& e) {
        return emit_record(result, k3aut::error_record(std::move(echo), "internal", e.what()));
    }
}

} // namespace

extern "C" {

const char* k3aut_version(void) { return k3aut::version_string(); }

const char* k3aut_status_name(int status)
{
    if (status == K3AUT_OK) return "ok";
    if (status <= -1 && status >= -14) return k3aut::error_code_name(static_cast<ErrorCode>(-status - 1));
    switch (status) {
    case K3AUT_ERROR_NULL_POINTER: return "null_pointer";
    case K3AUT_ERROR_INSUFFICIENT_BUFFER: return "insufficient_buffer";
    case K3AUT_ERROR_BAD_HANDLE: return "bad_handle";
    case K3AUT_ERROR_OUT_OF_MEMORY: return "out_of_memory";
    default: return "unknown";
    }
}

int k3aut_status_is_domain_error(int status)
{
    if (status <= -1 && status >= -14) return k3aut::is_domain_error(static_cast<ErrorCode>(-status - 1)) ? 1 : 0;
    return 0;
}

int k3aut_last_error(char* out, size_t* out_len) { return write_text(last_error, out, out_len); }

int k3aut_lattice_create(k3aut_lattice_t* lattice, const char* a, const char* b, const char* c)
{
    if (!lattice) return fail(K3AUT_ERROR_NULL_POINTER, "lattice is null");
    *lattice = nullptr;
    try {
        const k3aut::Integer A = parse(a, "a"), B = parse(b, "b"), C = parse(c, "c");
        auto l = std::make_unique<k3aut_lattice_struct>();
        l->lattice = k3aut::Rank2Lattice::make(A, B, C);
        l->a = A;
        l->b = B;
        l->c = C;
        *lattice = l.release();
        return K3AUT_OK;
    } catch (const Error& e) {
        return fail(status_of(e.code()), e.what());
    } catch (const std::bad_alloc&) {
        return fail(K3AUT_ERROR_OUT_OF_MEMORY, "out of memory");
    }
}

int k3aut_lattice_destroy(k3aut_lattice_t lattice)
{
    if (!lattice) return K3AUT_OK;
    if (!get(lattice)) return fail(K3AUT_ERROR_BAD_HANDLE, "not a lattice handle");
    lattice->magic = 0;
    delete lattice;
    return K3AUT_OK;
}

int k3aut_lattice_discriminant(k3aut_lattice_t lattice, char* out, size_t* out_len)
{
    const auto* l = get(lattice);
    if (!l) return fail(K3AUT_ERROR_BAD_HANDLE, "not a lattice handle");
    return write_text(k3aut::to_string(l->lattice.d()), out, out_len);
}

int k3aut_classify(k3aut_lattice_t lattice, int digits, k3aut_result_t* result)
{
    const auto* l = get(lattice);
    if (!l) return fail(K3AUT_ERROR_BAD_HANDLE, "not a lattice handle");
    if (int s = check_digits(digits)) return s;
    k3aut::InputEcho echo;
    echo.a = l->a;
    echo.b = l->b;
    echo.c = l->c;
    return run_record(result, echo, [&] { return k3aut::classify_record(l->a, l->b, l->c, digits); });
}

int k3aut_quartic(const char* degree, const char* genus, int digits, k3aut_result_t* result)
{
    if (int s = check_digits(digits)) return s;
    k3aut::InputEcho echo;
    try {
        echo.deg = parse(degree, "deg");
        echo.genus = parse(genus, "genus");
    } catch (const Error&) {
        // reported by the call below
    }
    return run_record(result, echo, [&] {
        return k3aut::quartic_record(parse(degree, "deg"), parse(genus, "genus"), digits);
    });
}

int k3aut_pell(const char* d, const char* m, const char* all_below, k3aut_result_t* result)
{
    return run_json(result, [&] {
        std::optional<k3aut::Integer> bound;
        if (all_below) bound = parse(all_below, "all-below");
        return k3aut::pell_json(parse(d, "d"), parse(m, "norm"), bound);
    });
}

int k3aut_represent(k3aut_lattice_t lattice, const char* k, k3aut_result_t* result)
{
    const auto* l = get(lattice);
    if (!l) return fail(K3AUT_ERROR_BAD_HANDLE, "not a lattice handle");
    return run_json(result, [&] { return k3aut::represent_json(l->a, l->b, l->c, parse(k, "k")); });
}

int k3aut_orbit(k3aut_lattice_t lattice, const char* x0, const char* y0, long steps, int digits,
                k3aut_result_t* result)
{
    const auto* l = get(lattice);
    if (!l) return fail(K3AUT_ERROR_BAD_HANDLE, "not a lattice handle");
    if (int s = check_digits(digits)) return s;
    return run_json(result, [&] {
        return k3aut::orbit_json(l->a, l->b, l->c, parse(x0, "x"), parse(y0, "y"), steps, digits);
    });
}

int k3aut_entropy(k3aut_lattice_t lattice, const char* matrix, int digits, k3aut_result_t* result)
{
    const auto* l = get(lattice);
    if (!l) return fail(K3AUT_ERROR_BAD_HANDLE, "not a lattice handle");
    if (int s = check_digits(digits)) return s;
    return run_json(result, [&] {
        std::optional<k3aut::Mat2> m;
        if (matrix) {
            std::string text(matrix);
            k3aut::Integer e[4];
            std::size_t start = 0;
            for (int i = 0; i < 4; ++i) {
                const std::size_t comma = text.find(',', start);
                if ((i < 3) != (comma != std::string::npos))
                    throw Error(ErrorCode::InvalidArgument, "matrix: expected alpha,beta,gamma,delta");
                e[i] = k3aut::parse_integer(text.substr(start, comma - start), "matrix");
                start = comma + 1;
            }
            m = k3aut::Mat2{e[0], e[1], e[2], e[3]};
        }
        return k3aut::entropy_json(l->a, l->b, l->c, m, digits);
    });
}

int k3aut_batch_line(const char* line, int digits, k3aut_result_t* result)
{
    if (!line) return fail(K3AUT_ERROR_NULL_POINTER, "line is null");
    if (int s = check_digits(digits)) return s;
    return run_record(result, {}, [&] { return k3aut::record_from_request_line(line, digits); });
}

int k3aut_result_json(k3aut_result_t result, char* out, size_t* out_len)
{
    const auto* r = get(result);
    if (!r) return fail(K3AUT_ERROR_BAD_HANDLE, "not a result handle");
    return write_text(r->text, out, out_len);
}

int k3aut_result_status(k3aut_result_t result, int* status)
{
    const auto* r = get(result);
    if (!r) return fail(K3AUT_ERROR_BAD_HANDLE, "not a result handle");
    if (!status) return fail(K3AUT_ERROR_NULL_POINTER, "status is null");
    *status = r->status;
    return K3AUT_OK;
}

int k3aut_result_variant(k3aut_result_t result, int* variant)
{
    const auto* r = get(result);
    if (!r) return fail(K3AUT_ERROR_BAD_HANDLE, "not a result handle");
    if (!variant) return fail(K3AUT_ERROR_NULL_POINTER, "variant is null");
    *variant = r->variant;
    return K3AUT_OK;
}

int k3aut_result_destroy(k3aut_result_t result)
{
    if (!result) return K3AUT_OK;
    if (!get(result)) return fail(K3AUT_ERROR_BAD_HANDLE, "not a result handle");
    result->magic = 0;
    delete result;
    return K3AUT_OK;
}

} // extern "C"
