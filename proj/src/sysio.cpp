#include "trichain/sysio.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

#include "trichain/dualspace.hpp"
#include "trichain/isolate.hpp"
#include "trichain/reg2sim.hpp"

namespace trichain {

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long now_ms_since(const std::chrono::steady_clock::time_point& t0) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<GaussianRational> parse_point(const std::string& text, size_t nvars) {
    std::vector<GaussianRational> pt;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) pt.push_back(gaussian_from_string(trim(item)));
    if (pt.size() != nvars)
        throw std::domain_error("point has " + std::to_string(pt.size()) +
                                " coordinates, expected " + std::to_string(nvars));
    return pt;
}

} // namespace

SystemFile parse_system(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::stringstream ss(text);
        std::string line;
        while (std::getline(ss, line)) {
            size_t hash = line.find('#');
            if (hash != std::string::npos) line = line.substr(0, hash);
            lines.push_back(line);
        }
    }

    std::optional<VarOrder> vars;
    std::vector<MPoly> polys;
    bool in_chain = false;
    for (size_t li = 0; li < lines.size(); ++li) {
        const int lineno = static_cast<int>(li) + 1;
        std::string line = trim(lines[li]);
        if (line.empty()) continue;
        if (!vars) {
            if (line.rfind("vars:", 0) != 0)
                throw ParseError("expected 'vars: <names>' line", lineno, 1);
            std::stringstream ss(line.substr(5));
            std::vector<std::string> names;
            std::string n;
            while (ss >> n) names.push_back(n);
            if (names.empty()) throw ParseError("no variables listed", lineno, 1);
            try {
                vars = VarOrder(names);
            } catch (const std::invalid_argument& e) {
                throw ParseError(e.what(), lineno, 1);
            }
            continue;
        }
        if (!in_chain) {
            if (line != "chain:") throw ParseError("expected 'chain:' line", lineno, 1);
            in_chain = true;
            continue;
        }
        MPoly p = parse_poly(line, *vars, lineno);
        if (p.is_constant())
            throw ParseError("constant polynomial in chain", lineno, 1);
        if (!polys.empty() && p.top_var() <= polys.back().top_var()) {
            if (p.top_var() == polys.back().top_var())
                throw ParseError("duplicate leading variable '" + vars->name(p.top_var()) + "'",
                                 lineno, 1);
            throw ParseError("leading variables not ascending", lineno, 1);
        }
        polys.push_back(std::move(p));
    }
    if (!vars) throw ParseError("missing 'vars:' line", 1, 1);
    if (!in_chain) throw ParseError("missing 'chain:' line", 1, 1);
    if (polys.empty()) throw ParseError("empty chain", 1, 1);
    return {*vars, TriangularSet(std::move(polys))};
}

// ---- documents ----

std::string document_to_json(const ResultDocument& doc) {
    nlohmann::json j;
    j["command"] = doc.command;
    j["vars"] = doc.vars;
    if (doc.branches) {
        nlohmann::json bs = nlohmann::json::array();
        for (const auto& b : *doc.branches)
            bs.push_back({{"chain", b.chain}, {"array", b.array}, {"product", b.product}});
        j["branches"] = bs;
    }
    if (doc.zeros) {
        nlohmann::json zs = nlohmann::json::array();
        for (const auto& z : *doc.zeros) {
            nlohmann::json box = nlohmann::json::array();
            for (const auto& iv : z.box) box.push_back({iv[0], iv[1]});
            zs.push_back({{"box", box}, {"multiplicity", z.multiplicity}});
        }
        j["zeros"] = zs;
    }
    if (doc.point) j["point"] = *doc.point;
    if (doc.array) j["array"] = *doc.array;
    if (doc.product) j["product"] = *doc.product;
    if (doc.multiplicity) j["multiplicity"] = *doc.multiplicity;
    if (doc.regular) j["regular"] = *doc.regular;
    j["ms"] = doc.ms;
    return j.dump(2);
}

ResultDocument document_from_json(const std::string& json) {
    nlohmann::json j = nlohmann::json::parse(json);
    ResultDocument doc;
    doc.command = j.at("command").get<std::string>();
    doc.vars = j.at("vars").get<std::vector<std::string>>();
    if (j.contains("branches")) {
        std::vector<BranchDoc> bs;
        for (const auto& b : j["branches"]) {
            BranchDoc bd;
            bd.chain = b.at("chain").get<std::vector<std::string>>();
            bd.array = b.at("array").get<std::vector<int>>();
            bd.product = b.at("product").get<long long>();
            bs.push_back(std::move(bd));
        }
        doc.branches = std::move(bs);
    }
    if (j.contains("zeros")) {
        std::vector<ZeroDoc> zs;
        for (const auto& z : j["zeros"]) {
            ZeroDoc zd;
            for (const auto& iv : z.at("box"))
                zd.box.push_back({iv.at(0).get<std::string>(), iv.at(1).get<std::string>()});
            zd.multiplicity = z.at("multiplicity").get<long long>();
            zs.push_back(std::move(zd));
        }
        doc.zeros = std::move(zs);
    }
    if (j.contains("point")) doc.point = j["point"].get<std::string>();
    if (j.contains("array")) doc.array = j["array"].get<std::vector<int>>();
    if (j.contains("product")) doc.product = j["product"].get<long long>();
    if (j.contains("multiplicity")) doc.multiplicity = j["multiplicity"].get<long long>();
    if (j.contains("regular")) doc.regular = j["regular"].get<bool>();
    doc.ms = j.at("ms").get<long long>();
    return doc;
}

std::string document_to_text(const ResultDocument& doc) {
    std::ostringstream os;
    if (doc.branches) {
        os << doc.branches->size() << " branch(es)\n";
        for (const auto& b : *doc.branches) {
            os << "  [";
            for (size_t i = 0; i < b.chain.size(); ++i) os << (i ? ", " : "") << b.chain[i];
            os << "]  array [";
            for (size_t i = 0; i < b.array.size(); ++i)
                os << (i ? "," : "") << b.array[i];
            os << "]  multiplicity " << b.product << "\n";
        }
    }
    if (doc.zeros) {
        os << doc.zeros->size() << " real zero(s)\n";
        for (const auto& z : *doc.zeros) {
            os << "  box [";
            for (size_t i = 0; i < z.box.size(); ++i)
                os << (i ? ", " : "") << "[" << z.box[i][0] << ", " << z.box[i][1] << "]";
            os << "]  multiplicity " << z.multiplicity << "\n";
        }
    }
    if (doc.array && doc.product) {
        os << "multiplicity array [";
        for (size_t i = 0; i < doc.array->size(); ++i) os << (i ? "," : "") << (*doc.array)[i];
        os << "], local multiplicity " << *doc.product << "\n";
    } else if (doc.multiplicity) {
        os << "local multiplicity " << *doc.multiplicity << "\n";
    }
    if (doc.regular) os << "regular: " << (*doc.regular ? "true" : "false") << "\n";
    os << "(" << doc.ms << " ms)\n";
    return os.str();
}

// ---- commands ----

ResultDocument run_decompose(const SystemFile& sys, const RunOptions&) {
    auto t0 = std::chrono::steady_clock::now();
    ZeroDimChain T = ZeroDimChain::make(sys.chain, sys.vars);
    auto dec = reg2sim_cached(T);
    ResultDocument doc;
    doc.command = "decompose";
    doc.vars = sys.vars.names();
    std::vector<BranchDoc> bs;
    for (const auto& b : dec->branches) {
        BranchDoc bd;
        for (const auto& p : b.chain.polys()) bd.chain.push_back(to_string(p, sys.vars));
        bd.array = b.array;
        bd.product = b.product();
        bs.push_back(std::move(bd));
    }
    doc.branches = std::move(bs);
    doc.ms = now_ms_since(t0);
    return doc;
}

ResultDocument run_mult(const SystemFile& sys, const std::string& point, const RunOptions&) {
    auto t0 = std::chrono::steady_clock::now();
    ZeroDimChain T = ZeroDimChain::make(sys.chain, sys.vars);
    auto pt = parse_point(point, sys.vars.size());
    auto [branch, mult] = reg_mult_branch(T, pt);
    auto dec = reg2sim_cached(T);
    ResultDocument doc;
    doc.command = "mult";
    doc.vars = sys.vars.names();
    doc.point = point;
    doc.array = dec->branches[branch].array;
    doc.product = mult;
    doc.ms = now_ms_since(t0);
    return doc;
}

ResultDocument run_isolate(const SystemFile& sys, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    ZeroDimChain T = ZeroDimChain::make(sys.chain, sys.vars);
    IsolateOptions io;
    io.depth_cap = opt.depth_cap;
    io.width = opt.width;
    io.threads = opt.threads;
    auto zeros = iso_mult(T, io);
    ResultDocument doc;
    doc.command = "isolate";
    doc.vars = sys.vars.names();
    std::vector<ZeroDoc> zs;
    for (const auto& z : zeros) {
        ZeroDoc zd;
        for (const auto& iv : z.box.intervals)
            zd.box.push_back({to_string(iv.lo), to_string(iv.hi)});
        zd.multiplicity = z.multiplicity;
        zs.push_back(std::move(zd));
    }
    doc.zeros = std::move(zs);
    doc.ms = now_ms_since(t0);
    return doc;
}

ResultDocument run_oracle(const SystemFile& sys, const std::string& point, const RunOptions& opt) {
    auto t0 = std::chrono::steady_clock::now();
    auto pt = parse_point(point, sys.vars.size());
    std::vector<Rational> ra;
    for (const auto& z : pt) {
        if (!z.is_real())
            throw std::domain_error("oracle accepts rational (real) points only");
        ra.push_back(z.re);
    }
    int dim = dual_space_dim(sys.chain.polys(), ra, opt.oracle_cap);
    ResultDocument doc;
    doc.command = "oracle";
    doc.vars = sys.vars.names();
    doc.point = point;
    doc.multiplicity = dim;
    doc.ms = now_ms_since(t0);
    return doc;
}

ResultDocument run_check(const SystemFile& sys, const RunOptions&) {
    auto t0 = std::chrono::steady_clock::now();
    ResultDocument doc;
    doc.command = "check";
    doc.vars = sys.vars.names();
    doc.regular = !validate_regular_chain(sys.chain, sys.vars).has_value();
    doc.ms = now_ms_since(t0);
    return doc;
}

} // namespace trichain
