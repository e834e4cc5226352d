#include "conifold/dimer.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <set>

namespace conifold {

namespace {

struct Indexed {
    std::map<std::string, int> nodeIdx;
    std::map<std::string, int> edgeIdx;
};

Indexed index_of(const DimerModel& d) {
    Indexed ix;
    for (size_t i = 0; i < d.nodes.size(); ++i) {
        if (!ix.nodeIdx.emplace(d.nodes[i].id, (int)i).second)
            throw DimerError("duplicate node id " + d.nodes[i].id);
    }
    for (size_t i = 0; i < d.edges.size(); ++i) {
        if (!ix.edgeIdx.emplace(d.edges[i].id, (int)i).second)
            throw DimerError("duplicate edge id " + d.edges[i].id);
    }
    return ix;
}

}  // namespace

void validate_dimer(const DimerModel& d) {
    Indexed ix = index_of(d);
    if (d.nodes.empty() || d.edges.empty()) throw DimerError("empty dimer");
    for (const auto& e : d.edges) {
        auto bIt = ix.nodeIdx.find(e.black), wIt = ix.nodeIdx.find(e.white);
        if (bIt == ix.nodeIdx.end() || wIt == ix.nodeIdx.end())
            throw DimerError("edge " + e.id + " references a missing node");
        if (d.nodes[bIt->second].color != DimerModel::Color::Black ||
            d.nodes[wIt->second].color != DimerModel::Color::White)
            throw DimerError("edge " + e.id + " is not black-to-white");
    }
    // rotations must list exactly the incident edges
    std::map<std::string, std::multiset<std::string>> incident;
    for (const auto& e : d.edges) {
        incident[e.black].insert(e.id);
        incident[e.white].insert(e.id);
    }
    for (const auto& n : d.nodes) {
        auto it = d.rotation.find(n.id);
        if (it == d.rotation.end()) throw DimerError("missing rotation at node " + n.id);
        std::multiset<std::string> listed(it->second.begin(), it->second.end());
        if (listed != incident[n.id])
            throw DimerError("rotation at node " + n.id + " does not match incident edges");
        if (listed.size() != std::set<std::string>(listed.begin(), listed.end()).size())
            throw DimerError("edge repeated in rotation at node " + n.id);
    }
    // connectivity over nodes
    std::set<std::string> seen;
    std::vector<std::string> stack = {d.nodes.front().id};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        if (!seen.insert(v).second) continue;
        for (const auto& e : d.edges) {
            if (e.black == v) stack.push_back(e.white);
            if (e.white == v) stack.push_back(e.black);
        }
    }
    if (seen.size() != d.nodes.size()) throw DimerError("dimer graph is not connected");
    // Euler characteristic of the embedding must vanish (torus)
    DimerFaces f = trace_faces(d);
    long long chi =
        (long long)d.nodes.size() - (long long)d.edges.size() + (long long)f.faces.size();
    if (chi != 0) throw DimerError("rotation system has Euler characteristic " +
                                   std::to_string(chi) + ", not a torus embedding");
}

DimerFaces trace_faces(const DimerModel& d) {
    Indexed ix = index_of(d);
    // dart = (edge index, towardWhite)
    auto headOf = [&](int e, bool towardWhite) {
        return towardWhite ? d.edges[e].white : d.edges[e].black;
    };
    auto nextDart = [&](int e, bool towardWhite) -> std::pair<int, bool> {
        const std::string& h = headOf(e, towardWhite);
        const auto& rot = d.rotation.at(h);
        auto pos = std::find(rot.begin(), rot.end(), d.edges[e].id);
        if (pos == rot.end()) throw DimerError("edge missing from rotation at " + h);
        const std::string& nextEdge = rot[(pos - rot.begin() + 1) % rot.size()];
        int ne = ix.edgeIdx.at(nextEdge);
        // directed away from h
        bool tw = (d.edges[ne].black == h);
        return {ne, tw};
    };
    std::set<std::pair<int, bool>> visited;
    DimerFaces out;
    for (size_t e = 0; e < d.edges.size(); ++e)
        for (bool tw : {true, false}) {
            std::pair<int, bool> start{(int)e, tw};
            if (visited.count(start)) continue;
            std::vector<std::pair<int, bool>> face;
            std::pair<int, bool> cur = start;
            do {
                visited.insert(cur);
                face.push_back(cur);
                cur = nextDart(cur.first, cur.second);
            } while (cur != start);
            out.faces.push_back(std::move(face));
        }
    return out;
}

NodeCycles node_cycles(const DimerModel& d) {
    NodeCycles out;
    for (const auto& n : d.nodes) {
        std::vector<std::string> cyc = d.rotation.at(n.id);
        if (n.color == DimerModel::Color::Black) std::reverse(cyc.begin(), cyc.end());
        if (n.color == DimerModel::Color::White)
            out.whiteCycles.push_back(std::move(cyc));
        else
            out.blackCycles.push_back(std::move(cyc));
    }
    return out;
}

Quiver dimer_to_quiver(const DimerModel& d) {
    validate_dimer(d);
    Indexed ix = index_of(d);
    DimerFaces fcs = trace_faces(d);
    // face containing a given dart
    std::map<std::pair<int, bool>, int> faceOf;
    for (size_t f = 0; f < fcs.faces.size(); ++f)
        for (const auto& dart : fcs.faces[f]) faceOf[dart] = (int)f;

    Quiver q;
    q.vertexCount = (int)fcs.faces.size();
    std::map<std::string, const Quiver::Arrow*> arrowById;
    for (size_t e = 0; e < d.edges.size(); ++e) {
        Quiver::Arrow a;
        a.id = d.edges[e].id;
        a.source = faceOf.at({(int)e, true});
        a.target = faceOf.at({(int)e, false});
        q.arrows.push_back(a);
    }
    for (const auto& a : q.arrows) arrowById[a.id] = &a;

    // node cycles must chain as directed arrow paths
    NodeCycles cycles = node_cycles(d);
    auto checkCycle = [&](const std::vector<std::string>& cyc) {
        for (size_t i = 0; i < cyc.size(); ++i) {
            const auto* a = arrowById.at(cyc[i]);
            const auto* b = arrowById.at(cyc[(i + 1) % cyc.size()]);
            if (a->target != b->source)
                throw DimerError("node cycle does not chain; invalid embedding");
        }
    };
    for (const auto& c : cycles.whiteCycles) checkCycle(c);
    for (const auto& c : cycles.blackCycles) checkCycle(c);

    // relations: the complement of each arrow inside its two node cycles,
    // stored in composition order (rightmost acts first)
    auto pathAround = [&](const std::vector<std::string>& cyc, const std::string& arrow) {
        auto pos = std::find(cyc.begin(), cyc.end(), arrow);
        std::vector<std::string> path;  // arrow-path order first
        for (size_t k = 1; k < cyc.size(); ++k)
            path.push_back(cyc[(pos - cyc.begin() + k) % cyc.size()]);
        std::reverse(path.begin(), path.end());  // composition order
        return path;
    };
    for (const auto& a : q.arrows) {
        const std::vector<std::string>* white = nullptr;
        const std::vector<std::string>* black = nullptr;
        for (const auto& c : cycles.whiteCycles)
            if (std::find(c.begin(), c.end(), a.id) != c.end()) white = &c;
        for (const auto& c : cycles.blackCycles)
            if (std::find(c.begin(), c.end(), a.id) != c.end()) black = &c;
        if (!white || !black) throw DimerError("arrow missing from a node cycle");
        if (white->size() < 2 || black->size() < 2)
            throw DimerError("node of degree < 2 admits no relation");
        q.relations.push_back({a.id, pathAround(*white, a.id), pathAround(*black, a.id)});
    }
    return q;
}

SheafElement evaluate_path_word(const PathWord& word) {
    if (word.empty()) throw std::invalid_argument("empty path word");
    auto gen = [](const std::string& name) -> BasisMorphism {
        if (name == "x") return arrow_x();
        if (name == "y") return arrow_y();
        if (name == "t1") return arrow_t1();
        if (name == "t2") return arrow_t2();
        throw std::invalid_argument("unknown arrow " + name);
    };
    BasisMorphism first = gen(word.back());
    SheafElement acc(first);
    Sector cur = first.sector;
    for (size_t i = word.size() - 1; i-- > 0;) {
        BasisMorphism next = gen(word[i]);
        if (!sectors_composable(cur, next.sector))
            throw std::invalid_argument("non-composable path word");
        acc = compose_closed_form(SheafElement(next), acc);
        cur = composed_sector(cur, next.sector);
    }
    return acc;
}

DimerModel conifold_dimer() {
    DimerModel d;
    d.nodes = {{"b", DimerModel::Color::Black}, {"w", DimerModel::Color::White}};
    d.edges = {{"x", "b", "w"}, {"y", "b", "w"}, {"t1", "b", "w"}, {"t2", "b", "w"}};
    d.rotation["b"] = {"x", "t1", "y", "t2"};
    d.rotation["w"] = {"x", "t1", "y", "t2"};
    return d;
}

std::string dimer_to_json(const DimerModel& d) {
    nlohmann::json j;
    j["nodes"] = nlohmann::json::array();
    for (const auto& n : d.nodes)
        j["nodes"].push_back({{"id", n.id},
                              {"color", n.color == DimerModel::Color::Black ? "black" : "white"}});
    j["edges"] = nlohmann::json::array();
    for (const auto& e : d.edges)
        j["edges"].push_back({{"id", e.id}, {"black", e.black}, {"white", e.white}});
    j["rotation"] = nlohmann::json::object();
    for (const auto& [n, rot] : d.rotation) j["rotation"][n] = rot;
    return j.dump(2);
}

DimerModel dimer_from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    DimerModel d;
    for (const auto& n : j.at("nodes")) {
        std::string color = n.at("color").get<std::string>();
        if (color != "black" && color != "white") throw DimerError("bad color " + color);
        d.nodes.push_back({n.at("id").get<std::string>(),
                           color == "black" ? DimerModel::Color::Black : DimerModel::Color::White});
    }
    for (const auto& e : j.at("edges"))
        d.edges.push_back({e.at("id").get<std::string>(), e.at("black").get<std::string>(),
                           e.at("white").get<std::string>()});
    for (const auto& [node, rot] : j.at("rotation").items())
        d.rotation[node] = rot.get<std::vector<std::string>>();
    return d;
}

std::string quiver_to_json(const Quiver& q) {
    nlohmann::json j;
    j["vertices"] = q.vertexCount;
    j["arrows"] = nlohmann::json::array();
    for (const auto& a : q.arrows)
        j["arrows"].push_back({{"id", a.id}, {"source", a.source}, {"target", a.target}});
    j["relations"] = nlohmann::json::array();
    for (const auto& r : q.relations)
        j["relations"].push_back({{"arrow", r.arrow}, {"plus", r.plus}, {"minus", r.minus}});
    return j.dump(2);
}

}  // namespace conifold
