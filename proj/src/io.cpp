#include "zcfast/io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace zcfast::io {

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
    return {buf, res.ptr};
}

void write_csv(std::ostream& os, const ComplexSequence& seq) {
    os << "k,re,im\n";
    for (std::size_t k = 0; k < seq.size(); ++k) {
        os << k << ',' << format_double(seq[k].real()) << ',' << format_double(seq[k].imag()) << '\n';
    }
}

void write_json(std::ostream& os, const ZcParams& params, const ComplexSequence& seq) {
    nlohmann::json samples = nlohmann::json::array();
    for (const Complex& z : seq) samples.push_back({z.real(), z.imag()});
    const nlohmann::json doc = {{"p", params.P.value()}, {"u", params.u}, {"ts", params.ts}, {"samples", samples}};
    os << doc.dump() << '\n';
}

namespace {

double parse_field(const std::string& s) {
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) throw std::runtime_error("bad number: " + s);
    return v;
}

}  // namespace

ComplexSequence read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "k,re,im") throw std::runtime_error("expected header k,re,im");
    ComplexSequence seq;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 == std::string::npos ? c1 : c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) throw std::runtime_error("bad row: " + line);
        if (std::stoull(line.substr(0, c1)) != seq.size()) throw std::runtime_error("k must run 0..P-1");
        seq.emplace_back(parse_field(line.substr(c1 + 1, c2 - c1 - 1)), parse_field(line.substr(c2 + 1)));
    }
    return seq;
}

ComplexSequence read_json(std::istream& is) {
    const auto doc = nlohmann::json::parse(is);
    ComplexSequence seq;
    for (const auto& pair : doc.at("samples")) seq.emplace_back(pair.at(0).get<double>(), pair.at(1).get<double>());
    return seq;
}

}  // namespace zcfast::io
