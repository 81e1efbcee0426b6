#include "kgraph/fixtures.hpp"

namespace kgraph {

namespace {

GraphInput t2() {
    GraphInput g;
    g.name = "T2";
    g.skeleton = {2, {"v"}, {{"b", 1, "v", "v"}, {"r", 2, "v", "v"}}};
    g.squares.squares = {{{"b", "r"}, {"r", "b"}}};
    return g;
}

GraphInput flip() {
    GraphInput g;
    g.name = "F";
    g.skeleton = {2, {"v"}, {{"b0", 1, "v", "v"}, {"b1", 1, "v", "v"}, {"r", 2, "v", "v"}}};
    g.squares.squares = {{{"b0", "r"}, {"r", "b1"}}, {{"b1", "r"}, {"r", "b0"}}};
    return g;
}

GraphInput disconnected() {
    GraphInput g;
    g.name = "D";
    g.skeleton = {2,
                  {"u", "w"},
                  {{"bu", 1, "u", "u"}, {"ru", 2, "u", "u"}, {"bw", 1, "w", "w"}, {"rw", 2, "w", "w"}}};
    g.squares.squares = {{{"bu", "ru"}, {"ru", "bu"}}, {{"bw", "rw"}, {"rw", "bw"}}};
    return g;
}

GraphInput linked() {
    GraphInput g;
    g.name = "D2";
    g.skeleton = {2,
                  {"u", "w"},
                  {{"b0", 1, "u", "u"},
                   {"b1", 1, "u", "u"},
                   {"r0", 2, "u", "u"},
                   {"r1", 2, "u", "u"},
                   {"bw", 1, "w", "w"},
                   {"rw", 2, "w", "w"},
                   {"c", 1, "w", "u"},
                   {"d", 2, "w", "u"}}};
    g.squares.squares = {{{"b0", "r0"}, {"r0", "b0"}},
                         {{"b0", "r1"}, {"r1", "b0"}},
                         {{"b1", "r0"}, {"r0", "b1"}},
                         {{"b1", "r1"}, {"r1", "b1"}},
                         {{"bw", "rw"}, {"rw", "bw"}},
                         {{"bw", "d"}, {"rw", "c"}},
                         {{"c", "r0"}, {"d", "b0"}},
                         {{"c", "r1"}, {"d", "b1"}}};
    return g;
}

}  // namespace

std::vector<std::string> fixture_names() { return {"T2", "F", "D", "D2"}; }

GraphInput fixture(std::string_view name) {
    if (name == "T2") return t2();
    if (name == "F") return flip();
    if (name == "D") return disconnected();
    if (name == "D2") return linked();
    throw InputError("unknown fixture '" + std::string(name) + "' (expected T2, F, D or D2)");
}

}  // namespace kgraph
