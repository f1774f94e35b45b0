#pragma once

#include <filesystem>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace mira {

using json = nlohmann::json;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Visits every line of a line-delimited file (final empty line, if the file
// ends with '\n', is not a line). Throws on unreadable file.
inline std::size_t for_each_line(const std::string& path,
                                 const std::function<void(std::string_view, std::size_t)>& fn) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        fn(line, lineno);
    }
    return lineno;
}

inline std::size_t for_each_jsonl(const std::string& path,
                                  const std::function<void(const json&, std::size_t)>& fn) {
    return for_each_line(path, [&](std::string_view line, std::size_t n) {
        if (line.empty()) return;
        fn(json::parse(line), n);
    });
}

// Writes to "<path>.tmp" and renames on commit, so a crashed stage never
// leaves a truncated artifact behind.
class AtomicWriter {
public:
    explicit AtomicWriter(std::string path)
        : path_(std::move(path)), tmp_(path_ + ".tmp"), out_(tmp_, std::ios::binary | std::ios::trunc) {
        if (!out_) throw std::runtime_error("cannot open for write: " + tmp_);
    }

    ~AtomicWriter() {
        if (!committed_) {
            out_.close();
            std::error_code ec;
            std::filesystem::remove(tmp_, ec);
        }
    }

    std::ostream& stream() { return out_; }

    void write_line(std::string_view s) { out_ << s << '\n'; }
    void write_json_line(const json& j) { out_ << j.dump() << '\n'; }

    void commit() {
        out_.flush();
        if (!out_) throw std::runtime_error("write failed: " + tmp_);
        out_.close();
        std::filesystem::rename(tmp_, path_);
        committed_ = true;
    }

private:
    std::string path_;
    std::string tmp_;
    std::ofstream out_;
    bool committed_ = false;
};

inline void write_text_atomic(const std::string& path, std::string_view content) {
    AtomicWriter w(path);
    w.stream() << content;
    w.commit();
}

inline void write_json_atomic(const std::string& path, const json& j) {
    AtomicWriter w(path);
    w.stream() << j.dump(2) << '\n';
    w.commit();
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return json::parse(in);
}

inline std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace mira
