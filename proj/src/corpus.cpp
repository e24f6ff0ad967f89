#include "sullivan/corpus.hpp"

#include <sstream>
#include <stdexcept>

#include "sullivan/io.hpp"

namespace sullivan {

namespace {

Model from_text(const std::string& name, const std::string& text) {
    return parse_model(text, name);
}

Model sphere(int k) {
    if (k < 2) throw std::invalid_argument("sphere:k needs k >= 2");
    std::ostringstream os;
    if (k % 2 == 1) {
        os << "generator y " << k << "\n";
    } else {
        os << "generator x " << k << "\n"
           << "generator y " << 2 * k - 1 << "\n"
           << "d y = x^2\n";
    }
    return from_text("sphere:" + std::to_string(k), os.str());
}

Model cpn(int m) {
    if (m < 1) throw std::invalid_argument("cpn:m needs m >= 1");
    std::ostringstream os;
    os << "generator x 2\n"
       << "generator y " << 2 * m + 1 << "\n"
       << "d y = x^" << m + 1 << "\n";
    return from_text("cpn:" + std::to_string(m), os.str());
}

Model odd_tower(const std::vector<int>& degrees) {
    if (degrees.empty()) throw std::invalid_argument("oddtower needs at least one degree");
    for (int d : degrees)
        if (d < 3 || d % 2 == 0)
            throw std::invalid_argument("oddtower degrees must be odd and >= 3");
    std::ostringstream os;
    for (size_t i = 0; i < degrees.size(); ++i)
        os << "generator y" << i + 1 << " " << degrees[i] << "\n";
    if (degrees.size() >= 3) {
        if (degrees.back() + 1 != degrees[0] + degrees[1])
            throw std::invalid_argument("oddtower: top degree must be |y1|+|y2|-1");
        os << "d y" << degrees.size() << " = y1*y2\n";
    }
    std::string name = "oddtower:";
    for (size_t i = 0; i < degrees.size(); ++i)
        name += (i ? "," : "") + std::to_string(degrees[i]);
    return from_text(name, os.str());
}

Model product_model(const std::string& name, const Model& a, const Model& b) {
    std::vector<Generator> gens;
    for (const auto& g : a.algebra().generators())
        gens.push_back({"a_" + g.name, static_cast<int>(gens.size()), g.degree});
    for (const auto& g : b.algebra().generators())
        gens.push_back({"b_" + g.name, static_cast<int>(gens.size()), g.degree});
    Algebra alg(std::move(gens));
    const size_t na = a.algebra().size();
    const size_t nb = b.algebra().size();
    std::vector<Element> diffs;
    for (size_t i = 0; i < na; ++i) {
        Element d(alg);
        for (const auto& [mono, coeff] : a.differential(i).terms()) {
            std::vector<int> exps(alg.size(), 0);
            for (size_t j = 0; j < na; ++j) exps[j] = mono.exps[j];
            d.add_term(make_monomial(alg, std::move(exps)), coeff);
        }
        diffs.push_back(std::move(d));
    }
    for (size_t i = 0; i < nb; ++i) {
        Element d(alg);
        for (const auto& [mono, coeff] : b.differential(i).terms()) {
            std::vector<int> exps(alg.size(), 0);
            for (size_t j = 0; j < nb; ++j) exps[na + j] = mono.exps[j];
            d.add_term(make_monomial(alg, std::move(exps)), coeff);
        }
        diffs.push_back(std::move(d));
    }
    return Model(std::move(alg), std::move(diffs), name);
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    size_t pos = 0;
    while (pos < s.size()) {
        size_t comma = s.find(',', pos);
        std::string piece = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (piece.empty()) throw std::invalid_argument("empty integer in parameter list");
        out.push_back(std::stoi(piece));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

}  // namespace

Model build_named_model(const std::string& name) {
    auto colon = name.find(':');
    std::string family = name.substr(0, colon);
    std::string params = colon == std::string::npos ? "" : name.substr(colon + 1);

    if (family == "sphere") return sphere(std::stoi(params));
    if (family == "cpn") return cpn(std::stoi(params));
    if (family == "oddtower") return odd_tower(parse_int_list(params));
    if (family == "product") {
        auto comma = params.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("product needs two comma-separated names");
        Model a = build_named_model(params.substr(0, comma));
        Model b = build_named_model(params.substr(comma + 1));
        return product_model(name, a, b);
    }
    if (family == "thmD") {
        if (params == "n1p3") {
            // q = r = s = 2, a = 1, b = 0
            return from_text(name,
                             "generator x 2\n"
                             "generator y1 3\n"
                             "generator y2 3\n"
                             "generator y3 3\n"
                             "generator y4 3\n"
                             "d y1 = x^2\n"
                             "d y2 = x^2\n");
        }
        if (params == "n2p3:W0") {
            return from_text(name,
                             "generator x1 2\n"
                             "generator x2 2\n"
                             "generator y1 3\n"
                             "generator y2 3\n"
                             "generator y3 3\n"
                             "generator y4 9\n"
                             "generator y5 3\n"
                             "d y1 = x1^2\n"
                             "d y2 = x1*x2\n"
                             "d y3 = x2^2\n"
                             "d y4 = x2^2*y1*y2 - x1*x2*y1*y3 + x1^2*y2*y3\n");
        }
        if (params == "n3p4:W2zero") {
            return from_text(name,
                             "generator x1 2\n"
                             "generator x2 2\n"
                             "generator x3 2\n"
                             "generator y1 3\n"
                             "generator y2 3\n"
                             "generator y3 3\n"
                             "generator y4 3\n"
                             "generator y5 3\n"
                             "generator y6 3\n"
                             "generator y7 3\n"
                             "d y1 = x1^2\n"
                             "d y2 = x2^2\n"
                             "d y3 = x3^2\n"
                             "d y4 = x1*x2\n"
                             "d y5 = x1*x3\n"
                             "d y6 = x2*x3\n");
        }
        throw std::invalid_argument("unknown thmD variant: " + params);
    }
    if (family == "hyperelliptic") {
        if (params == "sample") {
            return from_text(name,
                             "generator x 2\n"
                             "generator y1 3\n"
                             "generator y2 3\n"
                             "generator y3 7\n"
                             "d y3 = x^4 + x*y1*y2\n");
        }
        throw std::invalid_argument("unknown hyperelliptic variant: " + params);
    }
    throw std::invalid_argument("unknown model name: " + name);
}

std::vector<CorpusEntry> all_entries() {
    std::vector<CorpusEntry> entries;
    auto add = [&entries](const std::string& name, ExpectedResults exp) {
        entries.push_back({name, build_named_model(name), exp});
    };
    // expected totals frozen from the cross-checked pipeline output
    add("sphere:2", {2, 2, 2, true, true, false});
    add("sphere:3", {1, 2, 3, true, true, true});
    add("sphere:4", {2, 2, 4, true, true, false});
    add("sphere:5", {1, 2, 5, true, true, true});
    add("sphere:6", {2, 2, 6, true, true, false});
    add("sphere:7", {1, 2, 7, true, true, true});
    add("cpn:1", {2, 2, 2, true, true, false});
    add("cpn:2", {2, 3, 4, true, true, false});
    add("cpn:3", {2, 4, 6, true, true, false});
    add("cpn:4", {2, 5, 8, true, true, false});
    add("cpn:5", {2, 6, 10, true, true, false});
    add("product:sphere:3,sphere:5", {2, 4, 8, true, true, true});
    add("product:sphere:2,sphere:4", {4, 4, 6, true, true, false});
    add("oddtower:3,3,5", {3, 6, 11, false, false, true});
    add("thmD:n1p3", {5, 16, 11, true, true, false});
    add("thmD:n2p3:W0", {7, 24, 19, false, true, false});
    add("thmD:n3p4:W2zero", {10, 32, 18, true, true, false});
    add("hyperelliptic:sample", {4, 16, 12, false, true, false});
    return entries;
}

}  // namespace sullivan
