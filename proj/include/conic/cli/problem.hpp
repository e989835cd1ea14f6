#pragma once

#include <cstddef>
#include <iterator>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "conic/cone.hpp"
#include "conic/conic_set.hpp"
#include "conic/error.hpp"
#include "conic/rational.hpp"

namespace conic::cli {

using Json = nlohmann::ordered_json;

/// Input error anchored at a 1-based line and column.
class ParseError : public MalformedInput
{
  public:
    ParseError(std::size_t line, std::size_t column, const std::string& msg)
        : MalformedInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
          line_(line), column_(column)
    {
    }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

  private:
    std::size_t line_;
    std::size_t column_;
};

struct SetSpec
{
    std::string name;
    std::string kind; // finite | hpoly | family
    std::vector<RVector> points; // finite points or family table
    std::vector<RVector> normals;
    RVector offsets;
    std::string rule;

    bool operator==(const SetSpec&) const = default;
};

struct ElementSpec
{
    std::string pos;
    std::string neg;

    bool operator==(const ElementSpec&) const = default;
};

struct ProblemFile
{
    std::string task; // analyze | distance | cancel | radstrom | pareto | example
    std::size_t dimension = 0;
    std::string cone_kind; // generators | inequalities
    std::vector<RVector> cone_rows;
    std::vector<SetSpec> sets;
    std::vector<RVector> probes;
    std::vector<RVector> points;        // distance
    std::vector<ElementSpec> elements;  // radstrom
    std::string example;                // example

    bool operator==(const ProblemFile&) const = default;

    const SetSpec* find_set(std::string_view name) const
    {
        for (const auto& s : sets)
            if (s.name == name)
                return &s;
        return nullptr;
    }
};

inline const std::vector<std::string>& task_names()
{
    static const std::vector<std::string> t{"analyze", "distance", "cancel", "radstrom", "pareto", "example"};
    return t;
}

inline const std::vector<std::string>& example_names()
{
    static const std::vector<std::string> e{"c0-family", "ice-cream", "hyperbola", "c00-open"};
    return e;
}

namespace detail {

// Iterator over the input that counts how many characters the JSON lexer has consumed.
class CountingIterator
{
  public:
    using iterator_category = std::input_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    CountingIterator() = default;
    CountingIterator(const char* p, std::size_t* count) : p_(p), count_(count) {}

    reference operator*() const { return *p_; }
    CountingIterator& operator++()
    {
        ++p_;
        if (count_)
            ++*count_;
        return *this;
    }
    CountingIterator operator++(int)
    {
        CountingIterator old = *this;
        ++*this;
        return old;
    }
    bool operator==(const CountingIterator& o) const { return p_ == o.p_; }

  private:
    const char* p_ = nullptr;
    std::size_t* count_ = nullptr;
};

// SAX consumer that builds the document and remembers where each value ended.
class LocatingSax
{
  public:
    LocatingSax(const std::size_t* consumed, std::map<std::string, std::size_t>* ends) : consumed_(consumed), ends_(ends) {}

    Json root;

    bool null() { return put(Json(nullptr)); }
    bool boolean(bool v) { return put(Json(v)); }
    bool number_integer(Json::number_integer_t v) { return put(Json(v)); }
    bool number_unsigned(Json::number_unsigned_t v) { return put(Json(v)); }
    bool number_float(Json::number_float_t v, const std::string&) { return put(Json(v)); }
    bool string(std::string& v) { return put(Json(v)); }
    bool binary(Json::binary_t& v) { return put(Json(v)); }
    bool start_object(std::size_t) { return open(Json::object()); }
    bool end_object() { return close(); }
    bool start_array(std::size_t) { return open(Json::array()); }
    bool end_array() { return close(); }
    bool key(std::string& k)
    {
        key_ = k;
        return true;
    }
    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex)
    {
        error_byte = position;
        error = ex.what();
        return false;
    }

    std::size_t error_byte = 0;
    std::string error;

  private:
    std::string child_pointer() const
    {
        if (stack_.empty())
            return "";
        const Json& parent = *stack_.back().second;
        std::string seg = parent.is_array() ? std::to_string(parent.size()) : escape(key_);
        return stack_.back().first + "/" + seg;
    }

    static std::string escape(const std::string& k)
    {
        std::string out;
        for (char c : k) {
            if (c == '~')
                out += "~0";
            else if (c == '/')
                out += "~1";
            else
                out += c;
        }
        return out;
    }

    Json* insert(Json v)
    {
        if (stack_.empty()) {
            root = std::move(v);
            return &root;
        }
        Json& parent = *stack_.back().second;
        if (parent.is_array()) {
            parent.push_back(std::move(v));
            return &parent.back();
        }
        parent[key_] = std::move(v);
        return &parent[key_];
    }

    bool put(Json v)
    {
        (*ends_)[child_pointer()] = *consumed_;
        insert(std::move(v));
        return true;
    }

    bool open(Json v)
    {
        const std::string ptr = child_pointer();
        (*ends_)[ptr] = *consumed_;
        Json* slot = insert(std::move(v));
        stack_.emplace_back(ptr, slot);
        return true;
    }

    bool close()
    {
        stack_.pop_back();
        return true;
    }

    const std::size_t* consumed_;
    std::map<std::string, std::size_t>* ends_;
    std::vector<std::pair<std::string, Json*>> stack_;
    std::string key_;
};

inline std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

class Reader
{
  public:
    Reader(std::string_view text, const std::map<std::string, std::size_t>& ends, const Json& root)
        : text_(text), ends_(ends), root_(root)
    {
    }

    [[noreturn]] void fail(const std::string& ptr, const std::string& msg) const
    {
        // closest recorded ancestor; the offset is where its token ended, so step back to its start
        std::string p = ptr;
        auto it = ends_.find(p);
        while (it == ends_.end() && !p.empty()) {
            p.erase(p.rfind('/'));
            it = ends_.find(p);
        }
        std::size_t off = 0;
        if (it != ends_.end()) {
            off = it->second;
            const Json& v = root_.at(Json::json_pointer(p));
            if (v.is_primitive())
                off -= std::min(off, v.dump().size() + (v.is_number() ? 1 : 0));
            else if (off > 0)
                off -= 1;
        }
        const auto [line, col] = line_column(text_, off);
        throw ParseError(line, col, (ptr.empty() ? std::string("document") : ptr) + ": " + msg);
    }

    const Json& at(const std::string& ptr) const { return root_.at(Json::json_pointer(ptr)); }

    std::string string_at(const std::string& ptr) const
    {
        const Json& v = at(ptr);
        if (!v.is_string())
            fail(ptr, "expected a string");
        return v.get<std::string>();
    }

    Rational rational_at(const std::string& ptr) const
    {
        const Json& v = at(ptr);
        if (!v.is_string())
            fail(ptr, "rationals are written as strings \"p/q\", got " + v.dump());
        try {
            return parse_rational(v.get<std::string>());
        } catch (const MalformedInput& e) {
            fail(ptr, e.what());
        }
    }

    RVector vector_at(const std::string& ptr, std::size_t dim) const
    {
        const Json& v = at(ptr);
        if (!v.is_array())
            fail(ptr, "expected an array of rationals");
        if (v.size() != dim)
            fail(ptr, "expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
        RVector out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(rational_at(ptr + "/" + std::to_string(i)));
        return out;
    }

    std::vector<RVector> vectors_at(const std::string& ptr, std::size_t dim, bool nonempty) const
    {
        const Json& v = at(ptr);
        if (!v.is_array())
            fail(ptr, "expected an array of vectors");
        if (nonempty && v.empty())
            fail(ptr, "expected at least one vector");
        std::vector<RVector> out;
        for (std::size_t i = 0; i < v.size(); ++i)
            out.push_back(vector_at(ptr + "/" + std::to_string(i), dim));
        return out;
    }

    void only_keys(const std::string& ptr, const std::vector<std::string>& allowed) const
    {
        for (const auto& [k, _] : at(ptr).items())
            if (std::find(allowed.begin(), allowed.end(), k) == allowed.end())
                fail(ptr + "/" + k, "unknown key \"" + k + "\"");
    }

  private:
    std::string_view text_;
    const std::map<std::string, std::size_t>& ends_;
    const Json& root_;
};

inline bool is_one_of(const std::string& s, const std::vector<std::string>& options)
{
    return std::find(options.begin(), options.end(), s) != options.end();
}

inline std::string joined(const std::vector<std::string>& xs)
{
    std::string out;
    for (const auto& x : xs)
        out += (out.empty() ? "" : "|") + x;
    return out;
}

} // namespace detail

/**
 * Parses a problem file. Every input error, including JSON syntax errors and
 * dimension mismatches inside a set, raises ParseError with its location.
 */
inline ProblemFile parse_problem(std::string_view text)
{
    std::size_t consumed = 0;
    std::map<std::string, std::size_t> ends;
    detail::LocatingSax sax(&consumed, &ends);
    detail::CountingIterator first(text.data(), &consumed), last(text.data() + text.size(), nullptr);
    if (!Json::sax_parse(first, last, &sax)) {
        const auto [line, col] = detail::line_column(text, sax.error_byte > 0 ? sax.error_byte - 1 : 0);
        std::string msg = sax.error;
        if (const auto p = msg.find("syntax error"); p != std::string::npos)
            msg = msg.substr(p);
        throw ParseError(line, col, msg);
    }
    const Json& root = sax.root;
    const detail::Reader rd(text, ends, root);
    if (!root.is_object())
        rd.fail("", "expected a JSON object");
    rd.only_keys("", {"task", "dimension", "cone", "sets", "probes", "points", "elements", "name"});

    ProblemFile pf;
    if (!root.contains("task"))
        rd.fail("", "missing \"task\"");
    pf.task = rd.string_at("/task");
    if (!detail::is_one_of(pf.task, task_names()))
        rd.fail("/task", "unknown task \"" + pf.task + "\" (expected " + detail::joined(task_names()) + ")");

    if (pf.task == "example") {
        rd.only_keys("", {"task", "name"});
        if (!root.contains("name"))
            rd.fail("", "example task needs \"name\"");
        pf.example = rd.string_at("/name");
        if (!detail::is_one_of(pf.example, example_names()))
            rd.fail("/name", "unknown example \"" + pf.example + "\" (expected " + detail::joined(example_names()) + ")");
        return pf;
    }
    if (root.contains("name"))
        rd.fail("/name", "\"name\" is only used by the example task");

    if (!root.contains("dimension"))
        rd.fail("", "missing \"dimension\"");
    const Json& dim = root.at("dimension");
    if (!dim.is_number_unsigned() || dim.get<std::size_t>() == 0)
        rd.fail("/dimension", "dimension must be a positive integer");
    pf.dimension = dim.get<std::size_t>();

    if (!root.contains("cone"))
        rd.fail("", "missing \"cone\"");
    if (!root.at("cone").is_object() || root.at("cone").size() != 1)
        rd.fail("/cone", "cone must be {\"generators\": [...]} or {\"inequalities\": [...]}");
    rd.only_keys("/cone", {"generators", "inequalities"});
    pf.cone_kind = root.at("cone").begin().key();
    pf.cone_rows = rd.vectors_at("/cone/" + pf.cone_kind, pf.dimension, false);

    if (root.contains("sets")) {
        if (!root.at("sets").is_object())
            rd.fail("/sets", "sets must be an object keyed by set name");
        for (const auto& [name, body] : root.at("sets").items()) {
            if (name.empty() || name.find_first_not_of("ABCDEFGHIJKLMNOPQRSTUVWXYZabcdefghijklmnopqrstuvwxyz0123456789_-")
                                    != std::string::npos)
                rd.fail("/sets", "set name \"" + name + "\" must use letters, digits, '_' or '-'");
            const std::string ptr = "/sets/" + name;
            if (!body.is_object())
                rd.fail(ptr, "expected an object");
            SetSpec s;
            s.name = name;
            if (!body.contains("kind"))
                rd.fail(ptr, "missing \"kind\" (finite|hpoly|family)");
            s.kind = rd.string_at(ptr + "/kind");
            if (s.kind == "finite") {
                rd.only_keys(ptr, {"kind", "points"});
                if (!body.contains("points"))
                    rd.fail(ptr, "missing \"points\"");
                s.points = rd.vectors_at(ptr + "/points", pf.dimension, true);
            } else if (s.kind == "hpoly") {
                rd.only_keys(ptr, {"kind", "normals", "offsets"});
                if (!body.contains("normals") || !body.contains("offsets"))
                    rd.fail(ptr, "hpoly needs \"normals\" and \"offsets\"");
                s.normals = rd.vectors_at(ptr + "/normals", pf.dimension, false);
                s.offsets = rd.vector_at(ptr + "/offsets", s.normals.size());
            } else if (s.kind == "family") {
                rd.only_keys(ptr, {"kind", "table", "rule"});
                if (!body.contains("table"))
                    rd.fail(ptr, "missing \"table\"");
                s.points = rd.vectors_at(ptr + "/table", pf.dimension, true);
                if (body.contains("rule"))
                    s.rule = rd.string_at(ptr + "/rule");
            } else {
                rd.fail(ptr + "/kind", "unknown set kind \"" + s.kind + "\" (expected finite|hpoly|family)");
            }
            pf.sets.push_back(std::move(s));
        }
    }
    if (root.contains("probes"))
        pf.probes = rd.vectors_at("/probes", pf.dimension, false);
    if (root.contains("points"))
        pf.points = rd.vectors_at("/points", pf.dimension, false);
    if (root.contains("elements")) {
        const Json& els = root.at("elements");
        if (!els.is_array())
            rd.fail("/elements", "expected an array of {\"pos\": name, \"neg\": name}");
        for (std::size_t i = 0; i < els.size(); ++i) {
            const std::string ptr = "/elements/" + std::to_string(i);
            if (!els[i].is_object() || !els[i].contains("pos") || !els[i].contains("neg"))
                rd.fail(ptr, "expected {\"pos\": name, \"neg\": name}");
            rd.only_keys(ptr, {"pos", "neg"});
            ElementSpec e{rd.string_at(ptr + "/pos"), rd.string_at(ptr + "/neg")};
            if (!pf.find_set(e.pos))
                rd.fail(ptr + "/pos", "no set named \"" + e.pos + "\"");
            if (!pf.find_set(e.neg))
                rd.fail(ptr + "/neg", "no set named \"" + e.neg + "\"");
            pf.elements.push_back(std::move(e));
        }
    }

    // task-specific requirements
    auto need_set = [&](const std::string& name) {
        if (!pf.find_set(name))
            rd.fail(root.contains("sets") ? "/sets" : "", pf.task + " task needs a set named \"" + name + "\"");
    };
    if (pf.task == "analyze" && pf.sets.empty())
        rd.fail("", "analyze task needs at least one set");
    if (pf.task == "distance" && pf.points.empty())
        rd.fail(root.contains("points") ? "/points" : "", "distance task needs at least one point under \"points\"");
    if (pf.task == "cancel")
        for (const char* n : {"A", "B", "C"})
            need_set(n);
    if (pf.task == "radstrom" && pf.elements.empty())
        rd.fail(root.contains("elements") ? "/elements" : "", "radstrom task needs at least one element");
    if (pf.task == "pareto") {
        need_set("A");
        if (pf.find_set("A")->kind != "finite")
            rd.fail("/sets/A/kind", "pareto task needs a finite set A");
    }
    return pf;
}

namespace detail {

inline Json vector_json(const RVector& v)
{
    Json a = Json::array();
    for (const auto& x : v)
        a.push_back(to_fraction_string(x));
    return a;
}

inline Json vectors_json(const std::vector<RVector>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs)
        a.push_back(vector_json(v));
    return a;
}

} // namespace detail

/// Canonical JSON form: every rational as "p/q".
inline Json to_json(const ProblemFile& pf)
{
    Json j;
    j["task"] = pf.task;
    if (pf.task == "example") {
        j["name"] = pf.example;
        return j;
    }
    j["dimension"] = pf.dimension;
    j["cone"][pf.cone_kind] = detail::vectors_json(pf.cone_rows);
    if (!pf.sets.empty()) {
        Json sets = Json::object();
        for (const auto& s : pf.sets) {
            Json b;
            b["kind"] = s.kind;
            if (s.kind == "finite") {
                b["points"] = detail::vectors_json(s.points);
            } else if (s.kind == "hpoly") {
                b["normals"] = detail::vectors_json(s.normals);
                b["offsets"] = detail::vector_json(s.offsets);
            } else {
                b["table"] = detail::vectors_json(s.points);
                if (!s.rule.empty())
                    b["rule"] = s.rule;
            }
            sets[s.name] = std::move(b);
        }
        j["sets"] = std::move(sets);
    }
    if (!pf.probes.empty())
        j["probes"] = detail::vectors_json(pf.probes);
    if (!pf.points.empty())
        j["points"] = detail::vectors_json(pf.points);
    if (!pf.elements.empty()) {
        Json els = Json::array();
        for (const auto& e : pf.elements)
            els.push_back({{"pos", e.pos}, {"neg", e.neg}});
        j["elements"] = std::move(els);
    }
    return j;
}

inline std::string serialize_problem(const ProblemFile& pf) { return to_json(pf).dump(2) + "\n"; }

inline PolyhedralCone build_cone(const ProblemFile& pf)
{
    if (pf.cone_kind == "generators")
        return PolyhedralCone::from_generators(pf.dimension, pf.cone_rows);
    return PolyhedralCone::from_inequalities(pf.dimension, pf.cone_rows);
}

inline ConicSet build_set(const SetSpec& s, const PolyhedralCone& k)
{
    try {
        if (s.kind == "finite")
            return ConicSet::finite(k, s.points);
        if (s.kind == "hpoly")
            return ConicSet::hpoly(k, s.normals, s.offsets);
        return ConicSet::family(k, s.points, s.rule);
    } catch (const MalformedInput& e) {
        throw MalformedInput("set \"" + s.name + "\": " + e.what());
    }
}

} // namespace conic::cli
