#include "perfarr/io.hpp"

#include <fstream>
#include <random>
#include <stdexcept>

namespace perfarr {

using nlohmann::json;

namespace {

json shift_to_json(const ShiftVector& s) { return json(s); }

json complex_to_json(std::complex<double> v) { return json::array({v.real(), v.imag()}); }

} // namespace

json array_to_json(const ExponentArray& a) {
    json j;
    j["modulus"] = a.modulus();
    j["shape"] = a.shape();
    j["exponents"] = std::vector<std::int64_t>(a.exponents().begin(), a.exponents().end());
    return j;
}

ExponentArray array_from_json(const json& j) {
    if (!j.is_object() || !j.contains("modulus") || !j.contains("shape") || !j.contains("exponents"))
        throw std::invalid_argument("array JSON needs modulus, shape and exponents");
    return ExponentArray(j.at("modulus").get<std::int64_t>(),
                         j.at("shape").get<Shape>(),
                         j.at("exponents").get<std::vector<std::int64_t>>());
}

std::string canonical_json(const ExponentArray& a) { return array_to_json(a).dump(); }

json table_to_json(const CorrelationTable& table) {
    json j;
    j["shape"] = table.shape();
    j["backend"] = table.backend() == Backend::Exact ? "exact" : "fft";
    json values = json::array();
    for (std::int64_t i = 0; i < table.size(); ++i) values.push_back(complex_to_json(table.value_at(i)));
    j["values"] = std::move(values);
    json nonzero = json::array();
    for (const ShiftVector& s : table.nonzero_shifts()) nonzero.push_back(shift_to_json(s));
    j["nonzero_shifts"] = std::move(nonzero);
    return j;
}

json report_to_json(const PropertyReport& report) {
    json j;
    switch (report.property) {
        case Property::Perfect: j["property"] = "perfect"; break;
        case Property::Aop: j["property"] = "aop"; break;
        case Property::Gaop: j["property"] = "gaop"; break;
    }
    if (!report.divisors.empty())
        j["divisor"] = report.divisors.size() == 1 ? json(report.divisors[0]) : json(report.divisors);
    j["holds"] = report.holds;
    j["volume"] = report.volume;
    if (report.property != Property::Perfect) {
        json c1 = json::array();
        for (const PairFailure& f : report.condition1_failures)
            c1.push_back({{"pair", json::array({f.within_a, f.within_b})},
                          {"shift", f.shift},
                          {"value", complex_to_json(f.value)}});
        j["condition1_failures"] = std::move(c1);
        json c2 = json::array();
        for (const ShiftFailure& f : report.condition2_failures)
            c2.push_back({{"shift", f.shift}, {"value", complex_to_json(f.value)}});
        j["condition2_failures"] = std::move(c2);
        json summary;
        summary["shape"] = report.summary_shape;
        json values = json::array();
        for (const auto& v : report.summary_values) values.push_back(complex_to_json(v));
        summary["values"] = std::move(values);
        j["summary_table"] = std::move(summary);
        j["note"] = report.note;
    }
    if (report.witness) j["witness"] = *report.witness;
    return j;
}

json bench_to_json(const BenchReport& report) {
    json j;
    j["shape"] = report.shape;
    j["modulus"] = report.modulus;
    j["volume"] = report.volume;
    j["repetitions"] = report.repetitions;
    j["exact_seconds"] = report.exact_seconds;
    j["fft_seconds"] = report.fft_seconds;
    j["max_deviation"] = report.max_deviation;
    j["deviation_bound"] = report.deviation_bound;
    return j;
}

ExponentArray load_array(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw std::runtime_error("malformed JSON in " + path.string() + ": " + e.what());
    }
    return array_from_json(j);
}

void atomic_write(const std::filesystem::path& path, const std::string& bytes) {
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::mt19937_64 rng(std::random_device{}());
    const fs::path tmp = dir / (path.filename().string() + ".tmp." + std::to_string(rng()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::runtime_error("short write to " + tmp.string());
    }
    fs::rename(tmp, path);
}

} // namespace perfarr
