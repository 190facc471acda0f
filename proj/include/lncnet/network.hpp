#ifndef LNCNET_NETWORK_HPP
#define LNCNET_NETWORK_HPP

#include <deque>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "lncnet/prime.hpp"

namespace lncnet {

using json = nlohmann::ordered_json;

// Input parameters of the general 5-layer construction: source dimension
// omega >= 3 and layer-3 out-degrees d_1..d_omega, each >= 2.
struct NetworkParams {
    unsigned omega = 0;
    std::vector<u64> degrees;

    void validate() const {
        if (omega < 3) throw std::invalid_argument("NetworkParams: omega must be >= 3");
        if (degrees.size() != omega)
            throw std::invalid_argument("NetworkParams: expected " + std::to_string(omega) +
                                        " degrees");
        for (u64 d : degrees) {
            if (d < 2) throw std::invalid_argument("NetworkParams: every degree must be >= 2");
            if (d > (u64(1) << 40)) throw capacity_error("NetworkParams: degree too large");
        }
    }

    u64 degree_sum() const {
        u64 s = 0;
        for (u64 d : degrees) s += d;
        return s;
    }
};

struct Node {
    int id;
    int layer;
    std::string label;
};

struct SizeStats {
    u64 receivers;
    u64 nodes;
    u64 edges;
    unsigned omega;
};

namespace detail {

inline u64 binom_capped(u64 n, u64 k, u64 cap) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 r = 1;
    for (u64 i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > cap) return cap + 1;
    }
    return u64(r);
}

}  // namespace detail

// Immutable layered multicast network: a DAG with a unique source and a list
// of receiver nodes. Node ids are dense and creation-ordered; edge ids index
// the edge list (parallel edges allowed).
class Network {
public:
    unsigned omega() const { return omega_; }
    int source() const { return source_; }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& receivers() const { return receivers_; }
    const std::vector<int>& grey() const { return grey_; }
    const std::vector<int>& in_edges(int v) const { return in_edges_.at(v); }
    const std::vector<int>& out_edges(int v) const { return out_edges_.at(v); }

    int node_by_label(const std::string& label) const {
        for (const auto& n : nodes_)
            if (n.label == label) return n.id;
        return -1;
    }

    // Maximum number of edge-disjoint source->sinks paths (unit capacities).
    int max_flow(const std::vector<int>& sinks) const {
        if (sinks.empty()) throw std::invalid_argument("max_flow: empty sink set");
        std::vector<int> cap_to_sink(nodes_.size(), 0);
        for (int v : sinks) {
            if (v < 0 || v >= int(nodes_.size())) throw std::invalid_argument("max_flow: unknown node");
            if (v == source_) throw std::invalid_argument("max_flow: sinks must be non-source nodes");
            cap_to_sink[v] = int(in_edges_[v].size());
        }
        std::vector<int> res(edges_.size(), 1);  // residual forward capacity per edge
        const int t = int(nodes_.size());
        int flow = 0;
        while (true) {
            // BFS over the residual graph
            std::vector<int> how(nodes_.size() + 1, -2);  // edge id, or -1 for sink arc
            std::vector<int> prev(nodes_.size() + 1, -1);
            std::deque<int> queue{source_};
            how[source_] = -3;
            while (!queue.empty() && how[t] == -2) {
                int v = queue.front();
                queue.pop_front();
                if (v != t && cap_to_sink[v] > 0 && how[t] == -2) {
                    how[t] = -1;
                    prev[t] = v;
                    break;
                }
                for (int e : out_edges_[v])
                    if (res[e] == 1 && how[edges_[e].second] == -2) {
                        how[edges_[e].second] = e;
                        prev[edges_[e].second] = v;
                        queue.push_back(edges_[e].second);
                    }
                for (int e : in_edges_[v])
                    if (res[e] == 0 && how[edges_[e].first] == -2) {
                        how[edges_[e].first] = e;
                        prev[edges_[e].first] = v;
                        queue.push_back(edges_[e].first);
                    }
            }
            if (how[t] == -2) break;
            // walk back and flip residuals
            int v = prev[t];
            --cap_to_sink[v];
            while (v != source_) {
                int e = how[v];
                res[e] ^= 1;
                v = prev[v];
            }
            ++flow;
        }
        return flow;
    }

    // Parent node ids (sorted) of each receiver, in receiver order.
    std::vector<std::vector<int>> receiver_supports() const {
        std::vector<std::vector<int>> out;
        out.reserve(receivers_.size());
        for (int r : receivers_) {
            std::vector<int> parents;
            for (int e : in_edges_[r]) parents.push_back(edges_[e].first);
            std::sort(parents.begin(), parents.end());
            out.push_back(std::move(parents));
        }
        return out;
    }

    SizeStats stats() const {
        return SizeStats{receivers_.size(), nodes_.size(), edges_.size(), omega_};
    }

    std::string to_dot() const {
        std::string s = "digraph lncnet {\n  rankdir=TB;\n";
        int max_layer = 0;
        for (const auto& n : nodes_) max_layer = std::max(max_layer, n.layer);
        for (int l = 1; l <= max_layer; ++l) {
            std::string row;
            for (const auto& n : nodes_)
                if (n.layer == l) row += " \"" + n.label + "\";";
            if (!row.empty()) s += "  { rank=same;" + row + " }\n";
        }
        for (const auto& [f, t] : edges_)
            s += "  \"" + nodes_[f].label + "\" -> \"" + nodes_[t].label + "\";\n";
        s += "}\n";
        return s;
    }

    json to_json() const {
        json j;
        j["schema"] = 1;
        j["omega"] = omega_;
        int max_layer = 0;
        for (const auto& n : nodes_) max_layer = std::max(max_layer, n.layer);
        json layers = json::array();
        for (int l = 1; l <= max_layer; ++l) {
            json row = json::array();
            for (const auto& n : nodes_)
                if (n.layer == l) row.push_back(json{{"id", n.id}, {"label", n.label}});
            layers.push_back(std::move(row));
        }
        j["layers"] = std::move(layers);
        json es = json::array();
        for (const auto& [f, t] : edges_) es.push_back(json::array({f, t}));
        j["edges"] = std::move(es);
        json rs = json::array();
        for (const auto& sup : receiver_supports()) {
            json row = json::array();
            for (int p : sup) row.push_back(p);
            rs.push_back(std::move(row));
        }
        j["receivers"] = std::move(rs);
        return j;
    }

    static Network from_json(const json& j) {
        Network net;
        net.omega_ = j.at("omega").get<unsigned>();
        const auto& layers = j.at("layers");
        std::vector<Node> nodes;
        for (std::size_t l = 0; l < layers.size(); ++l)
            for (const auto& n : layers[l])
                nodes.push_back(Node{n.at("id").get<int>(), int(l + 1), n.at("label").get<std::string>()});
        std::sort(nodes.begin(), nodes.end(), [](const Node& a, const Node& b) { return a.id < b.id; });
        for (std::size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].id != int(i)) throw std::invalid_argument("network json: ids must be dense");
        net.nodes_ = std::move(nodes);
        net.in_edges_.assign(net.nodes_.size(), {});
        net.out_edges_.assign(net.nodes_.size(), {});
        for (const auto& e : j.at("edges")) {
            int f = e.at(0).get<int>(), t = e.at(1).get<int>();
            net.add_edge(f, t);
        }
        // source: the unique layer-1 node
        int src = -1;
        for (const auto& n : net.nodes_)
            if (n.layer == 1) {
                if (src != -1) throw std::invalid_argument("network json: multiple layer-1 nodes");
                src = n.id;
            }
        if (src == -1) throw std::invalid_argument("network json: no source");
        net.source_ = src;
        // receivers: out-degree-0 non-source nodes, in id order
        for (const auto& n : net.nodes_)
            if (n.id != src && net.out_edges_[n.id].empty()) net.receivers_.push_back(n.id);
        if (net.receivers_.size() != j.at("receivers").size())
            throw std::invalid_argument("network json: receiver count mismatch");
        auto sup = net.receiver_supports();
        for (std::size_t i = 0; i < sup.size(); ++i) {
            std::vector<int> want = j.at("receivers")[i].get<std::vector<int>>();
            std::sort(want.begin(), want.end());
            if (want != sup[i]) throw std::invalid_argument("network json: receiver parents mismatch");
        }
        // grey: the layer right above the receivers
        int rec_layer = net.receivers_.empty() ? 0 : net.nodes_[net.receivers_.front()].layer;
        for (const auto& n : net.nodes_)
            if (n.layer == rec_layer - 1) net.grey_.push_back(n.id);
        net.check_acyclic();
        return net;
    }

    // Algorithm-1 family: 5 layers, one receiver per omega-subset of layer-4
    // nodes whose max flow is omega.
    static Network general(const NetworkParams& params) {
        params.validate();
        const unsigned w = params.omega;
        Network net;
        net.omega_ = w;
        int s = net.add_node(1, "s");
        net.source_ = s;
        std::vector<int> u(w), v(w);
        for (unsigned i = 0; i < w; ++i) u[i] = net.add_node(2, "u_" + std::to_string(i + 1));
        for (unsigned i = 0; i < w; ++i) v[i] = net.add_node(3, "v_" + std::to_string(i + 1));
        for (unsigned i = 0; i < w; ++i) net.add_edge(s, u[i]);
        for (unsigned i = 0; i < w; ++i) {
            net.add_edge(u[(i + w - 1) % w], v[i]);
            net.add_edge(u[i], v[i]);
        }
        for (unsigned i = 0; i < w; ++i)
            for (u64 j = 0; j < params.degrees[i]; ++j) {
                int n = net.add_node(4, "n_{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "}");
                net.add_edge(v[i], n);
                net.grey_.push_back(n);
            }
        u64 total = detail::binom_capped(net.grey_.size(), w, runtime::build_limit());
        if (total > runtime::build_limit())
            throw capacity_error("general network: too many receiver candidates to enumerate");
        // lexicographic omega-subsets of the layer-4 nodes
        std::vector<unsigned> idx(w);
        for (unsigned i = 0; i < w; ++i) idx[i] = i;
        std::vector<int> subset(w);
        while (true) {
            for (unsigned i = 0; i < w; ++i) subset[i] = net.grey_[idx[i]];
            if (net.max_flow(subset) == int(w)) net.add_receiver(subset);
            // advance the combination
            unsigned i = w;
            while (i-- > 0) {
                if (idx[i] != i + net.grey_.size() - w) {
                    ++idx[i];
                    for (unsigned k = i + 1; k < w; ++k) idx[k] = idx[k - 1] + 1;
                    break;
                }
                if (i == 0) return net;
            }
        }
    }

    // Prescribed-q_min family: degenerate first four layers (v_1, v_2 with one
    // child each, v_3 with q-2 children) plus four hand-picked receiver groups,
    // some fed straight from layer 2.
    static Network prescribed_qmin(u64 q) {
        if (q < 5 || !is_prime_power(q))
            throw std::invalid_argument("prescribed_qmin: q must be a prime power >= 5");
        Network net;
        net.omega_ = 3;
        int s = net.add_node(1, "s");
        net.source_ = s;
        std::vector<int> u(3), v(3);
        for (int i = 0; i < 3; ++i) u[i] = net.add_node(2, "u_" + std::to_string(i + 1));
        for (int i = 0; i < 3; ++i) v[i] = net.add_node(3, "v_" + std::to_string(i + 1));
        for (int i = 0; i < 3; ++i) net.add_edge(s, u[i]);
        for (int i = 0; i < 3; ++i) {
            net.add_edge(u[(i + 2) % 3], v[i]);
            net.add_edge(u[i], v[i]);
        }
        int n11 = net.add_node(4, "n_{1,1}");
        net.add_edge(v[0], n11);
        int n21 = net.add_node(4, "n_{2,1}");
        net.add_edge(v[1], n21);
        std::vector<int> n3(q - 2);
        for (u64 j = 0; j < q - 2; ++j) {
            n3[j] = net.add_node(4, "n_{3," + std::to_string(j + 1) + "}");
            net.add_edge(v[2], n3[j]);
        }
        net.grey_ = {n11, n21};
        net.grey_.insert(net.grey_.end(), n3.begin(), n3.end());
        net.add_receiver({n11, u[1], u[2]});
        net.add_receiver({n21, u[0], u[2]});
        for (u64 j = 0; j < q - 2; ++j) net.add_receiver({n3[j], u[0], u[1]});
        for (u64 j = 1; j < q - 2; ++j) net.add_receiver({n11, n3[0], n3[j]});
        for (u64 i = 1; i < q - 2; ++i)
            for (u64 j = i + 1; j < q - 2; ++j) net.add_receiver({n21, n3[i], n3[j]});
        for (u64 j = 0; j < q - 2; ++j) net.add_receiver({n11, n21, n3[j]});
        return net;
    }

    // (n,2)-combination family: relays fed straight from the source, one
    // receiver per relay pair, plus one receiver fed by two parallel source
    // edges. The extended variant raises the source dimension to 3 through a
    // pass-through node wired into every receiver.
    static Network combination(u64 n, bool extended = false) {
        if (n < 3) throw std::invalid_argument("combination: n must be >= 3");
        Network net;
        net.omega_ = extended ? 3 : 2;
        int s = net.add_node(1, "s");
        net.source_ = s;
        int ext = -1;
        if (extended) {
            ext = net.add_node(2, "x");
            net.add_edge(s, ext);
        }
        std::vector<int> w(n);
        for (u64 i = 0; i < n; ++i) {
            w[i] = net.add_node(3, "w_" + std::to_string(i + 1));
            net.add_edge(s, w[i]);
        }
        net.grey_ = w;
        for (u64 i = 0; i < n; ++i)
            for (u64 j = i + 1; j < n; ++j) {
                if (extended)
                    net.add_receiver({w[i], w[j], ext});
                else
                    net.add_receiver({w[i], w[j]});
            }
        if (extended)
            net.add_receiver({s, s, ext});
        else
            net.add_receiver({s, s});
        return net;
    }

private:
    int add_node(int layer, std::string label) {
        int id = int(nodes_.size());
        nodes_.push_back(Node{id, layer, std::move(label)});
        in_edges_.emplace_back();
        out_edges_.emplace_back();
        return id;
    }

    int add_edge(int from, int to) {
        if (from < 0 || to < 0 || from >= int(nodes_.size()) || to >= int(nodes_.size()))
            throw std::invalid_argument("network: edge endpoint out of range");
        int id = int(edges_.size());
        edges_.emplace_back(from, to);
        out_edges_[from].push_back(id);
        in_edges_[to].push_back(id);
        return id;
    }

    void add_receiver(const std::vector<int>& parents) {
        int layer = 0;
        for (int p : parents) layer = std::max(layer, nodes_[p].layer);
        int r = add_node(layer + 1 < 4 ? 4 : layer + 1,
                         "r_" + std::to_string(receivers_.size() + 1));
        for (int p : parents) add_edge(p, r);
        receivers_.push_back(r);
    }

    void check_acyclic() const {
        std::vector<int> indeg(nodes_.size(), 0);
        for (const auto& [f, t] : edges_) ++indeg[t];
        std::deque<int> queue;
        for (std::size_t i = 0; i < nodes_.size(); ++i)
            if (indeg[i] == 0) queue.push_back(int(i));
        std::size_t seen = 0;
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            ++seen;
            for (int e : out_edges_[v])
                if (--indeg[edges_[e].second] == 0) queue.push_back(edges_[e].second);
        }
        if (seen != nodes_.size()) throw std::invalid_argument("network: graph has a cycle");
    }

    unsigned omega_ = 0;
    int source_ = -1;
    std::vector<Node> nodes_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> in_edges_, out_edges_;
    std::vector<int> receivers_;
    std::vector<int> grey_;
};

}  // namespace lncnet

#endif  // LNCNET_NETWORK_HPP
