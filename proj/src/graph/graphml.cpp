#include <map>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "artgraph/graph.hpp"

namespace artgraph::graph {

namespace {

namespace pt = boost::property_tree;

/// XML-escaped text. Characters XML 1.0 cannot carry become U+FFFD.
std::string escape(std::string_view s)
{
    std::string out;
    out.reserve(s.size());
    for (char ch : s) {
        auto c = static_cast<unsigned char>(ch);
        switch (ch) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        case '\'': out += "&apos;"; break;
        case '\n': out += "&#10;"; break;
        case '\r': out += "&#13;"; break;
        case '\t': out += "&#9;"; break;
        default:
            if (c < 0x20)
                out += "\xEF\xBF\xBD";
            else
                out += ch;
        }
    }
    return out;
}

std::string attr(const pt::ptree& node, const std::string& name)
{
    return node.get<std::string>(pt::ptree::path_type("<xmlattr>/" + name, '/'), "");
}

}  // namespace

std::string write_graphml(const ArtifactGraph& graph)
{
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n";
    out += "  <key id=\"d0\" for=\"node\" attr.name=\"type\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d1\" for=\"node\" attr.name=\"label\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d2\" for=\"edge\" attr.name=\"label\" attr.type=\"string\"/>\n";
    out += "  <key id=\"d3\" for=\"graph\" attr.name=\"origin\" attr.type=\"string\"/>\n";
    out += "  <graph id=\"G\" edgedefault=\"directed\">\n";
    out += "    <data key=\"d3\">" + escape(graph.origin) + "</data>\n";
    for (const auto& n : graph.nodes()) {
        out += "    <node id=\"" + escape(n.id) + "\">\n";
        out += "      <data key=\"d0\">" + escape(n.kind) + "</data>\n";
        out += "      <data key=\"d1\">" + escape(n.label) + "</data>\n";
        out += "    </node>\n";
    }
    for (const auto& e : graph.edges()) {
        out += "    <edge source=\"" + escape(e.source) + "\" target=\"" + escape(e.target) + "\">\n";
        out += "      <data key=\"d2\">" + std::string(to_string(e.label)) + "</data>\n";
        out += "    </edge>\n";
    }
    out += "  </graph>\n";
    out += "</graphml>\n";
    return out;
}

ArtifactGraph read_graphml(std::string_view text)
{
    pt::ptree doc;
    try {
        std::istringstream in{std::string(text)};
        pt::read_xml(in, doc);
    } catch (const pt::xml_parser_error& e) {
        throw GraphError(std::string("malformed XML: ") + e.what());
    }
    auto root = doc.get_child_optional("graphml");
    if (!root)
        throw GraphError("missing <graphml> element");

    std::map<std::string, std::string> node_keys;  // attr.name -> id
    std::string edge_key;
    std::string graph_key;
    const pt::ptree* graph_el = nullptr;
    for (const auto& [tag, child] : *root) {
        if (tag == "key") {
            std::string scope = attr(child, "for");
            if (scope == "node")
                node_keys[attr(child, "attr.name")] = attr(child, "id");
            else if (scope == "edge" && attr(child, "attr.name") == "label")
                edge_key = attr(child, "id");
            else if (scope == "graph" && attr(child, "attr.name") == "origin")
                graph_key = attr(child, "id");
        } else if (tag == "graph") {
            if (graph_el)
                throw GraphError("more than one <graph> element");
            graph_el = &child;
        }
    }
    if (!node_keys.contains("type") || node_keys["type"] != "d0")
        throw GraphError("<key> d0 named 'type' is not declared");
    if (!graph_el)
        throw GraphError("missing <graph> element");
    const std::string type_key = node_keys["type"];
    const std::string label_key = node_keys.contains("label") ? node_keys["label"] : "d1";

    ArtifactGraph g;
    for (const auto& [tag, child] : *graph_el) {
        if (tag == "data" && !graph_key.empty() && attr(child, "key") == graph_key) {
            g.origin = child.get_value<std::string>();
        } else if (tag == "node") {
            GraphNode n;
            n.id = attr(child, "id");
            if (n.id.empty())
                throw GraphError("<node> without id");
            bool has_type = false;
            for (const auto& [dtag, data] : child) {
                if (dtag != "data")
                    continue;
                std::string key = attr(data, "key");
                if (key == type_key) {
                    n.kind = data.get_value<std::string>();
                    has_type = true;
                } else if (key == label_key) {
                    n.label = data.get_value<std::string>();
                }
            }
            if (!has_type)
                throw GraphError("<node id=\"" + n.id + "\"> has no d0 data");
            try {
                g.add_node(std::move(n));
            } catch (const GraphError& e) {
                throw GraphError(std::string("<node>: ") + e.what());
            }
        } else if (tag == "edge") {
            std::string source = attr(child, "source");
            std::string target = attr(child, "target");
            std::optional<EdgeLabel> label;
            for (const auto& [dtag, data] : child)
                if (dtag == "data" && attr(data, "key") == edge_key)
                    label = edge_label_from_name(data.get_value<std::string>());
            std::string where = "<edge source=\"" + source + "\" target=\"" + target + "\">";
            if (!label)
                throw GraphError(where + " has no AST_CHILD/SPEC label");
            if (!g.find(source) || !g.find(target))
                throw GraphError(where + " references an unknown node");
            g.add_edge(source, target, *label);
        }
    }
    return g;
}

}  // namespace artgraph::graph
