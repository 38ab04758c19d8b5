#include "latpack/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace latpack {

namespace {

using OrderedJson = nlohmann::ordered_json;

bool all_rational(const SMat& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j).rad != 0) return false;
    return true;
}

OrderedJson lattice_object(const Lattice& l) {
    OrderedJson j;
    j["name"] = l.name();
    j["dim"] = l.dim();
    bool rational = all_rational(l.gram());
    j["field"] = rational ? "Q" : "Q(sqrt2)";
    OrderedJson gram = OrderedJson::array();
    for (int i = 0; i < l.dim(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int k = 0; k < l.dim(); ++k) row.push_back(format_scalar(l.gram().at(i, k)));
        gram.push_back(std::move(row));
    }
    j["gram"] = std::move(gram);
    return j;
}

QSqrt2 entry(const OrderedJson& v, bool rational_field) {
    if (!v.is_string()) throw IoError("matrix entries must be exact scalar strings");
    QSqrt2 s;
    try {
        s = parse_scalar(v.get<std::string>());
    } catch (const Error& e) {
        throw IoError(std::string("bad scalar: ") + e.what());
    }
    if (rational_field && s.rad != 0)
        throw IoError("field is declared \"Q\" but an entry involves sqrt2");
    return s;
}

struct ParsedFile {
    Lattice lattice;
    std::vector<std::vector<QSqrt2>> offsets;
    bool has_offsets = false;
};

ParsedFile parse_file(const std::string& text) {
    OrderedJson j;
    try {
        j = OrderedJson::parse(text);
    } catch (const OrderedJson::exception& e) {
        throw IoError(std::string("not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("name") || !j.contains("dim") ||
        !j.contains("field") || !j.contains("gram"))
        throw IoError("lattice file needs name, dim, field and gram");
    if (!j["name"].is_string() || !j["dim"].is_number_integer())
        throw IoError("name must be a string and dim an integer");
    std::string field = j["field"].is_string() ? j["field"].get<std::string>() : "";
    if (field != "Q" && field != "Q(sqrt2)")
        throw IoError("field must be \"Q\" or \"Q(sqrt2)\"");
    bool rational = field == "Q";

    int n = j["dim"].get<int>();
    const OrderedJson& gram = j["gram"];
    if (n < 1 || !gram.is_array() || static_cast<int>(gram.size()) != n)
        throw IoError("gram must be a dim x dim array");
    SMat g(n, n);
    for (int i = 0; i < n; ++i) {
        if (!gram[i].is_array() || static_cast<int>(gram[i].size()) != n)
            throw IoError("gram must be a dim x dim array");
        for (int k = 0; k < n; ++k) g.at(i, k) = entry(gram[i][k], rational);
    }

    ParsedFile out{Lattice::from_gram(j["name"].get<std::string>(), std::move(g)), {}, false};
    if (j.contains("offsets")) {
        out.has_offsets = true;
        const OrderedJson& offs = j["offsets"];
        if (!offs.is_array() || offs.empty())
            throw IoError("offsets must be a nonempty array of coordinate vectors");
        for (const auto& row : offs) {
            if (!row.is_array() || static_cast<int>(row.size()) != n)
                throw IoError("every offset needs dim coordinates");
            std::vector<QSqrt2> o;
            o.reserve(n);
            for (const auto& v : row) o.push_back(entry(v, rational));
            out.offsets.push_back(std::move(o));
        }
    }
    return out;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path);
    out << text;
    if (!out) throw IoError("cannot write " + path);
}

} // namespace

std::string lattice_to_json(const Lattice& l) {
    return lattice_object(l).dump(2) + "\n";
}

std::string packing_to_json(const PeriodicPacking& p) {
    OrderedJson j = lattice_object(p.base());
    j["name"] = p.name();
    OrderedJson offs = OrderedJson::array();
    for (const auto& o : p.offsets()) {
        OrderedJson row = OrderedJson::array();
        for (const QSqrt2& x : o) row.push_back(format_scalar(x));
        offs.push_back(std::move(row));
    }
    j["offsets"] = std::move(offs);
    return j.dump(2) + "\n";
}

Lattice lattice_from_json(const std::string& text) {
    ParsedFile p = parse_file(text);
    if (p.has_offsets)
        throw IoError("file describes a packing; load it as one");
    return p.lattice;
}

PeriodicPacking packing_from_json(const std::string& text) {
    ParsedFile p = parse_file(text);
    if (!p.has_offsets) return PeriodicPacking::from_lattice(p.lattice);
    std::string name = p.lattice.name();
    return PeriodicPacking::make(name, std::move(p.lattice), std::move(p.offsets));
}

Lattice load_lattice(const std::string& path) { return lattice_from_json(slurp(path)); }

PeriodicPacking load_packing(const std::string& path) { return packing_from_json(slurp(path)); }

void save_lattice(const Lattice& l, const std::string& path) { spill(path, lattice_to_json(l)); }

void save_packing(const PeriodicPacking& p, const std::string& path) {
    spill(path, packing_to_json(p));
}

std::string code_to_text(const BinaryCode& c) {
    std::string out = std::to_string(c.length()) + " " +
                      (c.is_linear() ? std::to_string(c.dimension()) : "nonlinear") + "\n";
    for (std::uint32_t w : c.words()) {
        for (int j = 0; j < c.length(); ++j) out += char('0' + ((w >> j) & 1));
        out += '\n';
    }
    return out;
}

BinaryCode code_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string header;
    if (!std::getline(in, header)) throw IoError("empty code file");
    std::istringstream hs(header);
    int n = 0;
    std::string kind;
    if (!(hs >> n >> kind)) throw IoError("code header must be \"n k\" or \"n nonlinear\"");
    if (n < 1 || n > 32) throw IoError("code length must be between 1 and 32");

    std::vector<std::uint32_t> words;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (static_cast<int>(line.size()) != n)
            throw IoError("codeword \"" + line + "\" does not have " + std::to_string(n) +
                          " coordinates");
        std::uint32_t w = 0;
        for (int j = 0; j < n; ++j) {
            if (line[j] == '1')
                w |= (1u << j);
            else if (line[j] != '0')
                throw IoError("codewords are strings of '0' and '1'");
        }
        words.push_back(w);
    }
    if (words.empty()) throw IoError("code file lists no codewords");
    BinaryCode c = BinaryCode::from_words(n, std::move(words));

    if (kind != "nonlinear") {
        int k = 0;
        try {
            k = std::stoi(kind);
        } catch (const std::exception&) {
            throw IoError("code header must be \"n k\" or \"n nonlinear\"");
        }
        if (!c.is_linear()) throw IoError("header declares a linear code but the words are not");
        if (c.dimension() != k)
            throw IoError("header declares dimension " + std::to_string(k) + " but the words span " +
                          std::to_string(c.dimension()));
    }
    return c;
}

BinaryCode load_code(const std::string& path) { return code_from_text(slurp(path)); }

void save_code(const BinaryCode& c, const std::string& path) { spill(path, code_to_text(c)); }

} // namespace latpack
