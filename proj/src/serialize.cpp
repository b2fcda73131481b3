#include "folkweave/serialize.hpp"

#include <algorithm>
#include <fstream>

#include "folkweave/errors.hpp"

namespace folkweave {

namespace {

using nlohmann::json;

json node_to_json(const SaplingNode& n) {
    json j;
    j["raw"] = n.raw_name;
    j["stem"] = n.stem;
    j["tags"] = json::object();
    for (const auto& [tag, count] : n.tags.entries()) j["tags"][tag] = count;
    j["users"] = json::array();
    for (const auto& u : n.users) j["users"].push_back(u);
    return j;
}

SaplingNode node_from_json(const json& j) {
    SaplingNode n;
    n.raw_name = j.at("raw").get<std::string>();
    n.stem = j.at("stem").get<std::string>();
    for (auto it = j.at("tags").begin(); it != j.at("tags").end(); ++it)
        n.tags.add(it.key(), it.value().get<std::int64_t>());
    for (const auto& u : j.at("users")) n.users.insert(u.get<std::string>());
    return n;
}

json tree_node_to_json(const FolksonomyTree& tree, NodeId id) {
    const TreeNode& n = tree.node(id);
    json j;
    j["stem"] = n.stem;
    j["aliases"] = json::array();
    for (const auto& a : n.aliases) j["aliases"].push_back(a);
    j["users"] = json::array();
    for (const auto& u : n.users) j["users"].push_back(u);
    std::vector<NodeId> kids = n.children;
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
        return tree.node(a).stem < tree.node(b).stem;
    });
    j["children"] = json::array();
    for (NodeId ch : kids) j["children"].push_back(tree_node_to_json(tree, ch));
    return j;
}

void tree_node_from_json(const json& j, FolksonomyTree& tree, NodeId at) {
    for (const auto& a : j.at("aliases")) tree.add_alias(at, a.get<std::string>());
    for (const auto& child : j.at("children")) {
        std::set<std::string> users;
        for (const auto& u : child.at("users")) users.insert(u.get<std::string>());
        NodeId id =
            tree.add_child(at, child.at("stem").get<std::string>(),
                           child.at("stem").get<std::string>(), TagStats{}, users);
        tree_node_from_json(child, tree, id);
    }
}

void dot_edges(const FolksonomyTree& tree, NodeId id, std::string& out) {
    const TreeNode& n = tree.node(id);
    std::vector<NodeId> kids = n.children;
    std::sort(kids.begin(), kids.end(), [&](NodeId a, NodeId b) {
        return tree.node(a).stem < tree.node(b).stem;
    });
    for (NodeId ch : kids) {
        out += "  \"" + n.stem + "\" -> \"" + tree.node(ch).stem + "\";\n";
        dot_edges(tree, ch, out);
    }
}

}  // namespace

void save_saplings(const std::string& path, const std::vector<Sapling>& saplings) {
    json j;
    j["format"] = kSaplingFormat;
    j["version"] = kSaplingVersion;
    j["saplings"] = json::array();
    for (const auto& s : saplings) {
        json js;
        js["id"] = s.id;
        js["user"] = s.user;
        js["root"] = node_to_json(s.root);
        js["leaves"] = json::array();
        for (const auto& l : s.leaves) js["leaves"].push_back(node_to_json(l));
        j["saplings"].push_back(std::move(js));
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open sapling store '" + path + "' for writing");
    out << j.dump(2) << "\n";
}

std::vector<Sapling> load_saplings(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open sapling store '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("sapling store '" + path + "' is not valid JSON: " + e.what());
    }
    if (!j.is_object() || j.value("format", "") != kSaplingFormat)
        throw InputError("sapling store '" + path + "' has an unrecognized format tag");
    if (j.value("version", -1) != kSaplingVersion)
        throw InputError("sapling store '" + path + "' has version " +
                         j.value("version", json{}).dump() + ", expected " +
                         std::to_string(kSaplingVersion));
    std::vector<Sapling> out;
    try {
        for (const auto& js : j.at("saplings")) {
            Sapling s;
            s.id = js.at("id").get<std::string>();
            s.user = js.at("user").get<std::string>();
            s.root = node_from_json(js.at("root"));
            for (const auto& jl : js.at("leaves")) s.leaves.push_back(node_from_json(jl));
            s.check();
            out.push_back(std::move(s));
        }
    } catch (const json::exception& e) {
        throw InputError("sapling store '" + path + "' is malformed: " + e.what());
    }
    return out;
}

nlohmann::json tree_to_json(const FolksonomyTree& tree) {
    return tree_node_to_json(tree, tree.root());
}

std::string tree_to_dot(const FolksonomyTree& tree) {
    std::string out = "digraph folksonomy {\n";
    dot_edges(tree, tree.root(), out);
    out += "}\n";
    return out;
}

void save_tree(const std::string& path, const FolksonomyTree& tree) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open tree file '" + path + "' for writing");
    out << tree_to_json(tree).dump(2) << "\n";
}

FolksonomyTree load_tree(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open tree file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw InputError("tree file '" + path + "' is not valid JSON: " + e.what());
    }
    try {
        std::set<std::string> users;
        for (const auto& u : j.at("users")) users.insert(u.get<std::string>());
        FolksonomyTree tree(j.at("stem").get<std::string>(), j.at("stem").get<std::string>(),
                            TagStats{}, users);
        tree_node_from_json(j, tree, tree.root());
        tree.validate();
        return tree;
    } catch (const json::exception& e) {
        throw InputError("tree file '" + path + "' is malformed: " + e.what());
    }
}

nlohmann::json metrics_to_json(const Metrics& m) {
    json j;
    j["leaves"] = m.leaves;
    j["aut"] = m.aut;
    j["overlap_leaves"] = m.overlap_leaves;
    j["lexical_recall"] = m.lexical_recall ? json(*m.lexical_recall) : json(nullptr);
    j["fmto"] = m.fmto ? json(*m.fmto) : json(nullptr);
    j["avg_depth"] = m.avg_depth;
    return j;
}

void save_metrics(const std::string& path, const Metrics& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open metrics file '" + path + "' for writing");
    out << metrics_to_json(m).dump(2) << "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InputError("cannot open '" + path + "' for writing");
    out << content;
}

}  // namespace folkweave
