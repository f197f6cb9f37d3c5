#include "hermop/kernel_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hermop {

namespace {

std::string escape_json(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        if (static_cast<unsigned char>(ch) < 0x20)
            throw std::invalid_argument("kernel file: control character in metadata");
        out.push_back(ch);
    }
    return out;
}

}  // namespace

std::string kernel_file_text(const KernelMatrix& K, const KernelFileMetadata& meta) {
    std::ostringstream os;
    os << "{\n";
    os << "  \"version\": 1,\n";
    os << "  \"d1\": " << K.d1() << ", \"d2\": " << K.d2() << ", \"N1\": " << K.N1()
       << ", \"N2\": " << K.N2() << ",\n";
    os << "  \"ordering\": \"graded-lex\",\n";
    if (!meta.generator.empty() || meta.seed) {
        os << "  \"metadata\": {";
        bool first = true;
        if (!meta.generator.empty()) {
            os << "\"generator\": \"" << escape_json(meta.generator) << "\"";
            first = false;
        }
        if (meta.seed) {
            if (!first) os << ", ";
            os << "\"seed\": " << *meta.seed;
        }
        os << "},\n";
    }
    os << "  \"entries\": [";
    char buf[40];
    const auto entries = K.entries();
    const std::size_t cols = K.cols();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i % cols == 0) os << "\n    ";
        std::snprintf(buf, sizeof buf, "%.17g", entries[i]);
        os << buf;
        if (i + 1 < entries.size()) os << (((i + 1) % cols == 0) ? "," : ", ");
    }
    os << "\n  ]\n}\n";
    return os.str();
}

void write_kernel_file(const std::string& path, const KernelMatrix& K,
                       const KernelFileMetadata& meta) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    out << kernel_file_text(K, meta);
    if (!out) throw std::runtime_error("write failed for '" + path + "'");
}

LoadedKernel parse_kernel_file(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("kernel file: not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("kernel file: top level must be an object");

    auto need = [&](const char* key) -> const nlohmann::json& {
        if (!doc.contains(key))
            throw FormatError(std::string("kernel file: missing field '") + key + "'");
        return doc.at(key);
    };

    if (!need("version").is_number_integer() || need("version").get<int>() != 1)
        throw FormatError("kernel file: unsupported version (expected 1)");
    if (!need("ordering").is_string() || need("ordering").get<std::string>() != "graded-lex")
        throw FormatError("kernel file: ordering must be the literal string \"graded-lex\"");

    auto dim = [&](const char* key, int lo) {
        const auto& v = need(key);
        if (!v.is_number_integer())
            throw FormatError(std::string("kernel file: '") + key + "' must be an integer");
        int x = v.get<int>();
        if (x < lo)
            throw FormatError(std::string("kernel file: '") + key + "' out of range");
        return x;
    };
    const int d1 = dim("d1", 1), d2 = dim("d2", 1), n1 = dim("N1", 0), n2 = dim("N2", 0);

    GradedIndexMap rows(d2, n2), cols(d1, n1);
    const auto& entries = need("entries");
    if (!entries.is_array())
        throw FormatError("kernel file: 'entries' must be an array");
    if (entries.size() != rows.size() * cols.size())
        throw FormatError("kernel file: entries length " + std::to_string(entries.size()) +
                          " does not equal count(d2,N2)*count(d1,N1) = " +
                          std::to_string(rows.size() * cols.size()));

    std::vector<double> values;
    values.reserve(entries.size());
    for (const auto& e : entries) {
        if (!e.is_number())
            throw FormatError("kernel file: entries must be numbers");
        double v = e.get<double>();
        if (!std::isfinite(v))
            throw FormatError("kernel file: entries must be finite");
        values.push_back(v);
    }

    KernelFileMetadata meta;
    if (doc.contains("metadata")) {
        const auto& m = doc.at("metadata");
        if (!m.is_object()) throw FormatError("kernel file: metadata must be an object");
        if (m.contains("generator")) {
            if (!m.at("generator").is_string())
                throw FormatError("kernel file: metadata.generator must be a string");
            meta.generator = m.at("generator").get<std::string>();
        }
        if (m.contains("seed")) {
            if (!m.at("seed").is_number_unsigned())
                throw FormatError("kernel file: metadata.seed must be an unsigned integer");
            meta.seed = m.at("seed").get<std::uint64_t>();
        }
    }

    return LoadedKernel{KernelMatrix(rows, cols, std::move(values)), std::move(meta)};
}

LoadedKernel read_kernel_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open kernel file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_kernel_file(ss.str());
}

}  // namespace hermop
