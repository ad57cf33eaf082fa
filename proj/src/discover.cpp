#include "jscefr/discover.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace jscefr {

namespace {

bool has_accepted_extension(const std::string& name,
                            const std::vector<std::string>& extensions) {
    for (const std::string& ext : extensions) {
        if (name.size() > ext.size() &&
            name.compare(name.size() - ext.size(), ext.size(), ext) == 0) {
            return true;
        }
    }
    return false;
}

bool is_excluded(const std::string& name,
                 const std::vector<std::string>& excludes) {
    return std::find(excludes.begin(), excludes.end(), name) != excludes.end();
}

void walk_dir(const fs::path& dir, const std::string& rel_prefix,
              const DiscoveryConfig& config, Discovery& out) {
    std::error_code ec;
    std::vector<fs::directory_entry> entries;
    for (fs::directory_iterator it(dir, ec), end; !ec && it != end;
         it.increment(ec)) {
        entries.push_back(*it);
    }
    if (ec) {
        out.warnings.push_back("cannot read directory " + dir.string() + ": " +
                               ec.message());
        return;
    }
    // Deterministic traversal so warnings come out in a stable order; the
    // final path list is re-sorted globally anyway.
    std::sort(entries.begin(), entries.end(),
              [](const fs::directory_entry& a, const fs::directory_entry& b) {
                  return a.path().filename().string() <
                         b.path().filename().string();
              });
    for (const fs::directory_entry& entry : entries) {
        const std::string name = entry.path().filename().string();
        std::error_code sec;
        fs::file_status st = entry.symlink_status(sec);
        if (sec) {
            out.warnings.push_back("cannot stat " + entry.path().string() +
                                   ": " + sec.message());
            continue;
        }
        if (fs::is_directory(st)) {
            if (!is_excluded(name, config.excludes)) {
                walk_dir(entry.path(),
                         rel_prefix.empty() ? name : rel_prefix + "/" + name,
                         config, out);
            }
            continue;
        }
        // Directory symlinks are skipped (cycle safety); file symlinks count
        // if their target is a regular file.
        if (fs::is_symlink(st)) {
            std::error_code tec;
            fs::file_status target = entry.status(tec);
            if (tec || !fs::is_regular_file(target)) continue;
        } else if (!fs::is_regular_file(st)) {
            continue;
        }
        if (has_accepted_extension(name, config.extensions)) {
            out.paths.push_back(rel_prefix.empty() ? name
                                                   : rel_prefix + "/" + name);
        }
    }
}

}  // namespace

Discovery discover_js_files(const std::string& root,
                            const DiscoveryConfig& config) {
    std::error_code ec;
    fs::path resolved = fs::weakly_canonical(fs::path(root), ec);
    if (ec) resolved = fs::absolute(fs::path(root));
    if (!fs::exists(resolved)) {
        throw DiscoveryError("root does not exist: " + root);
    }
    if (!fs::is_directory(resolved)) {
        throw DiscoveryError("root is not a directory: " + root);
    }

    Discovery out;
    out.repo = resolved.filename().string();
    if (out.repo.empty()) out.repo = "root";

    walk_dir(resolved, "", config, out);
    std::sort(out.paths.begin(), out.paths.end());
    return out;
}

LoadedFile load_source_file(const std::string& root, const std::string& repo,
                            const std::string& rel_path) {
    LoadedFile out;
    fs::path full = fs::path(root) / fs::path(rel_path);
    std::ifstream in(full, std::ios::binary);
    if (!in.good()) {
        out.error = "cannot read " + full.string();
        return out;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string text = std::move(buf).str();
    if (text.size() >= 3 && text.compare(0, 3, "\xEF\xBB\xBF") == 0) {
        text.erase(0, 3);
    }
    if (!valid_utf8(text)) {
        out.error = "not valid UTF-8: " + repo + "/" + rel_path;
        return out;
    }
    out.file = SourceFile{repo, repo + "/" + rel_path, std::move(text)};
    return out;
}

bool valid_utf8(std::string_view text) {
    size_t i = 0;
    const size_t n = text.size();
    while (i < n) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 0x80) {
            ++i;
            continue;
        }
        int extra;
        unsigned char lo = 0x80, hi = 0xBF;
        if (c >= 0xC2 && c <= 0xDF) {
            extra = 1;
        } else if (c == 0xE0) {
            extra = 2;
            lo = 0xA0;  // reject overlong three-byte forms
        } else if (c >= 0xE1 && c <= 0xEC) {
            extra = 2;
        } else if (c == 0xED) {
            extra = 2;
            hi = 0x9F;  // reject UTF-16 surrogates
        } else if (c >= 0xEE && c <= 0xEF) {
            extra = 2;
        } else if (c == 0xF0) {
            extra = 3;
            lo = 0x90;  // reject overlong four-byte forms
        } else if (c >= 0xF1 && c <= 0xF3) {
            extra = 3;
        } else if (c == 0xF4) {
            extra = 3;
            hi = 0x8F;  // cap at U+10FFFF
        } else {
            return false;
        }
        if (i + static_cast<size_t>(extra) >= n) return false;
        for (int k = 1; k <= extra; ++k) {
            unsigned char cc = static_cast<unsigned char>(text[i + k]);
            unsigned char want_lo = (k == 1) ? lo : 0x80;
            unsigned char want_hi = (k == 1) ? hi : 0xBF;
            if (cc < want_lo || cc > want_hi) return false;
        }
        i += static_cast<size_t>(extra) + 1;
    }
    return true;
}

}  // namespace jscefr
