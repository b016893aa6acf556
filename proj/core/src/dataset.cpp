#include "ktbench/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "ktbench/csv.hpp"
#include "ktbench/errors.hpp"
#include "ktbench/rng.hpp"

namespace ktbench {

int SkillVocabulary::id_for(const std::string& tag) {
    auto it = ids_.find(tag);
    if (it != ids_.end()) return it->second;
    int id = static_cast<int>(tags_.size());
    ids_.emplace(tag, id);
    tags_.push_back(tag);
    return id;
}

std::optional<int> SkillVocabulary::find(const std::string& tag) const {
    auto it = ids_.find(tag);
    if (it == ids_.end()) return std::nullopt;
    return it->second;
}

const std::string& SkillVocabulary::tag(int id) const {
    if (id < 0 || id >= static_cast<int>(tags_.size()))
        throw ConfigError("skill id out of range: " + std::to_string(id));
    return tags_[static_cast<size_t>(id)];
}

std::string SkillVocabulary::joint_tag(std::vector<std::string> tags) {
    std::sort(tags.begin(), tags.end());
    tags.erase(std::unique(tags.begin(), tags.end()), tags.end());
    std::string out;
    for (size_t i = 0; i < tags.size(); ++i) {
        if (i) out += '+';
        out += tags[i];
    }
    return out;
}

bool FoldSplit::is_test(const std::string& id) const {
    return std::binary_search(test_students.begin(), test_students.end(), id);
}

DatasetFormat parse_format(const std::string& name) {
    if (name == "canonical") return DatasetFormat::canonical;
    if (name == "assistments") return DatasetFormat::assistments;
    if (name == "kdd") return DatasetFormat::kdd;
    throw ConfigError("unknown dataset format: " + name);
}

std::string format_name(DatasetFormat f) {
    switch (f) {
        case DatasetFormat::canonical: return "canonical";
        case DatasetFormat::assistments: return "assistments";
        case DatasetFormat::kdd: return "kdd";
    }
    return "?";
}

namespace {

struct ColumnNames {
    std::string order, student, item, skill, correct;
};

ColumnNames default_columns(DatasetFormat f) {
    switch (f) {
        case DatasetFormat::canonical:
            return {"order", "student", "item", "skill", "correct"};
        case DatasetFormat::assistments:
            return {"order_id", "user_id", "problem_id", "skill_id", "correct"};
        case DatasetFormat::kdd:
            return {"Row", "Anon Student Id", "Step Name", "KC(Default)",
                    "Correct First Attempt"};
    }
    return {};
}

struct RawRow {
    long file_row;
    double order_key;
    std::string student;
    std::string item;
    std::string skill_tag;
    int correct;
};

bool parse_binary(const std::string& s, int* out) {
    if (s == "0") { *out = 0; return true; }
    if (s == "1") { *out = 1; return true; }
    return false;
}

bool parse_order(const std::string& s, double* out) {
    if (s.empty()) return false;
    char* end = nullptr;
    double v = std::strtod(s.c_str(), &end);
    if (end != s.c_str() + s.size() || !std::isfinite(v)) return false;
    *out = v;
    return true;
}

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
}

// Splits a multi-tag skill cell ("a~~b" in KDD exports) into raw tags.
std::vector<std::string> split_tags(const std::string& cell) {
    std::vector<std::string> tags;
    size_t pos = 0;
    while (pos <= cell.size()) {
        size_t sep = cell.find("~~", pos);
        if (sep == std::string::npos) {
            std::string t = trim(cell.substr(pos));
            if (!t.empty()) tags.push_back(t);
            break;
        }
        std::string t = trim(cell.substr(pos, sep - pos));
        if (!t.empty()) tags.push_back(t);
        pos = sep + 2;
    }
    return tags;
}

} // namespace

Dataset load_interactions(const std::string& path, const LoadOptions& opts) {
    char delim = (opts.format == DatasetFormat::kdd) ? '\t' : ',';
    CsvTable table = read_csv(path, delim);
    if (table.header.empty()) throw DataError("empty dataset: " + path);

    ColumnNames names = default_columns(opts.format);
    auto override = [&](const char* key, std::string* slot) {
        auto it = opts.columns.find(key);
        if (it != opts.columns.end()) *slot = it->second;
    };
    override("order", &names.order);
    override("student", &names.student);
    override("item", &names.item);
    override("skill", &names.skill);
    override("correct", &names.correct);

    int c_order = table.column(names.order);
    int c_student = table.column(names.student);
    int c_item = table.column(names.item);
    int c_skill = table.column(names.skill);
    int c_correct = table.column(names.correct);
    if (c_order < 0) throw ConfigError("missing column '" + names.order + "' in " + path);
    if (c_student < 0) throw ConfigError("missing column '" + names.student + "' in " + path);
    if (c_skill < 0) throw ConfigError("missing column '" + names.skill + "' in " + path);
    if (c_correct < 0) throw ConfigError("missing column '" + names.correct + "' in " + path);
    if (opts.format == DatasetFormat::canonical && c_item < 0)
        throw ConfigError("missing column '" + names.item + "' in " + path);

    long dropped = 0;
    std::map<std::string, std::vector<RawRow>> by_student;
    for (size_t r = 0; r < table.rows.size(); ++r) {
        const auto& row = table.rows[r];
        auto cell = [&](int c) -> std::string {
            return (c >= 0 && c < static_cast<int>(row.size())) ? row[static_cast<size_t>(c)] : "";
        };
        RawRow raw;
        raw.file_row = static_cast<long>(r);
        raw.student = trim(cell(c_student));
        raw.item = trim(cell(c_item));
        std::vector<std::string> tags = split_tags(cell(c_skill));
        if (raw.student.empty() || tags.empty() ||
            !parse_binary(trim(cell(c_correct)), &raw.correct) ||
            !parse_order(trim(cell(c_order)), &raw.order_key)) {
            ++dropped;
            continue;
        }
        raw.skill_tag = (tags.size() == 1) ? tags[0]
                        : (opts.multiskill == MultiskillMode::joint)
                            ? SkillVocabulary::joint_tag(tags)
                            : tags[0];
        by_student[raw.student].push_back(std::move(raw));
    }
    if (by_student.empty()) throw DataError("no valid rows in " + path);

    Dataset ds;
    ds.vocab = SkillVocabulary(opts.multiskill);
    ds.dropped_rows = dropped;
    for (auto& [student, rows] : by_student) {
        std::stable_sort(rows.begin(), rows.end(),
                         [](const RawRow& a, const RawRow& b) { return a.order_key < b.order_key; });
        StudentSequence seq;
        seq.student_id = student;
        seq.records.reserve(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            InteractionRecord rec;
            rec.student_id = student;
            rec.skill_id = ds.vocab.id_for(rows[i].skill_tag);
            rec.item_id = rows[i].item;
            rec.correct = rows[i].correct;
            rec.order_index = static_cast<int>(i);
            rec.order_key = rows[i].order_key;
            seq.records.push_back(std::move(rec));
        }
        ds.students.push_back(std::move(seq));
    }
    return ds;
}

Dataset clean_records(const Dataset& ds, CleanStats* stats) {
    CleanStats local;
    Dataset out;
    out.vocab = SkillVocabulary(ds.vocab.mode());
    out.dropped_rows = ds.dropped_rows;

    for (const auto& seq : ds.students) {
        // Bucket records sharing (order_key, item, correct): duplicated rows
        // of a single attempt, possibly carrying different skill tags.
        struct Attempt {
            double order_key;
            std::string item;
            int correct;
            std::vector<std::string> tags; // raw skill tags, file order
        };
        std::vector<Attempt> attempts;
        size_t i = 0;
        while (i < seq.records.size()) {
            size_t j = i;
            while (j < seq.records.size() &&
                   seq.records[j].order_key == seq.records[i].order_key)
                ++j;
            // within an equal-timestamp block, group by (item, correct)
            std::vector<Attempt> block;
            for (size_t k = i; k < j; ++k) {
                const auto& rec = seq.records[k];
                const std::string& tag = ds.vocab.tag(rec.skill_id);
                bool merged = false;
                for (auto& a : block) {
                    if (a.item == rec.item_id && a.correct == rec.correct) {
                        a.tags.push_back(tag);
                        ++local.removed_duplicates;
                        merged = true;
                        break;
                    }
                }
                if (!merged)
                    block.push_back({rec.order_key, rec.item_id, rec.correct, {tag}});
            }
            for (auto& a : block) attempts.push_back(std::move(a));
            i = j;
        }

        StudentSequence cleaned;
        cleaned.student_id = seq.student_id;
        std::vector<std::string> seen_items;
        for (auto& a : attempts) {
            if (!a.item.empty()) {
                if (std::find(seen_items.begin(), seen_items.end(), a.item) != seen_items.end()) {
                    ++local.removed_reattempts;
                    continue; // only the first attempt per item survives
                }
                seen_items.push_back(a.item);
            }
            std::string tag;
            if (a.tags.size() == 1) {
                tag = a.tags[0];
            } else if (ds.vocab.mode() == MultiskillMode::joint) {
                tag = SkillVocabulary::joint_tag(a.tags);
            } else {
                tag = a.tags[0];
            }
            InteractionRecord rec;
            rec.student_id = seq.student_id;
            rec.skill_id = out.vocab.id_for(tag);
            rec.item_id = a.item;
            rec.correct = a.correct;
            rec.order_index = static_cast<int>(cleaned.records.size());
            rec.order_key = a.order_key;
            cleaned.records.push_back(std::move(rec));
            ++local.kept;
        }
        if (!cleaned.records.empty()) out.students.push_back(std::move(cleaned));
    }
    if (stats) *stats = local;
    return out;
}

std::vector<FoldSplit> student_level_split(const Dataset& ds, int n_folds,
                                           std::uint64_t seed) {
    if (n_folds <= 0) throw ConfigError("n_folds must be positive");
    if (static_cast<int>(ds.students.size()) < n_folds)
        throw ConfigError("fewer students (" + std::to_string(ds.students.size()) +
                          ") than folds (" + std::to_string(n_folds) + ")");

    std::vector<std::string> ids;
    ids.reserve(ds.students.size());
    for (const auto& s : ds.students) ids.push_back(s.student_id);
    std::sort(ids.begin(), ids.end());
    auto rng = make_rng(seed, "fold-split");
    std::shuffle(ids.begin(), ids.end(), rng);

    std::vector<FoldSplit> folds(static_cast<size_t>(n_folds));
    for (int f = 0; f < n_folds; ++f) folds[static_cast<size_t>(f)].fold_index = f;
    for (size_t i = 0; i < ids.size(); ++i)
        folds[i % static_cast<size_t>(n_folds)].test_students.push_back(ids[i]);
    for (auto& fold : folds) {
        std::sort(fold.test_students.begin(), fold.test_students.end());
        for (const auto& id : ids)
            if (!fold.is_test(id)) fold.train_students.push_back(id);
        std::sort(fold.train_students.begin(), fold.train_students.end());
    }
    return folds;
}

SynthData generate_synthetic(const SynthConfig& cfg) {
    if (cfg.n_students <= 0 || cfg.n_skills <= 0 || cfg.n_groups <= 0 ||
        cfg.attempts_per_student <= 0)
        throw ConfigError("synthetic config requires positive counts");

    std::vector<double> base = cfg.group_base;
    if (base.empty()) {
        for (int g = 0; g < cfg.n_groups; ++g) {
            double frac = (cfg.n_groups > 1)
                              ? static_cast<double>(g) / (cfg.n_groups - 1)
                              : 0.0;
            base.push_back(0.8 - 0.5 * frac);
        }
    }
    std::vector<double> growth = cfg.group_growth;
    if (growth.empty()) growth.assign(static_cast<size_t>(cfg.n_groups), 0.0);
    if (static_cast<int>(base.size()) != cfg.n_groups ||
        static_cast<int>(growth.size()) != cfg.n_groups)
        throw ConfigError("group parameter vectors must have n_groups entries");

    int width = 1;
    for (int n = cfg.n_students - 1; n >= 10; n /= 10) ++width;

    auto rng = make_rng(cfg.seed, "synth");
    std::uniform_int_distribution<int> skill_dist(0, cfg.n_skills - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    SynthData out;
    out.dataset.vocab = SkillVocabulary(MultiskillMode::first);
    for (int u = 0; u < cfg.n_students; ++u) {
        std::ostringstream name;
        name << "s";
        std::string digits = std::to_string(u);
        name << std::string(static_cast<size_t>(width) - digits.size(), '0') << digits;
        int group = u % cfg.n_groups;
        out.group_of_student[name.str()] = group;

        StudentSequence seq;
        seq.student_id = name.str();
        std::vector<int> practice(static_cast<size_t>(cfg.n_skills), 0);
        for (int t = 0; t < cfg.attempts_per_student; ++t) {
            int s = skill_dist(rng);
            double offset = (cfg.n_skills > 1)
                                ? 2.0 * s / (cfg.n_skills - 1) - 1.0
                                : 0.0;
            double p = base[static_cast<size_t>(group)] +
                       growth[static_cast<size_t>(group)] * practice[static_cast<size_t>(s)] +
                       cfg.skill_spread * offset;
            p = std::clamp(p, cfg.clamp_lo, cfg.clamp_hi);
            int correct = (unit(rng) < p) ? 1 : 0;

            InteractionRecord rec;
            rec.student_id = seq.student_id;
            rec.skill_id = out.dataset.vocab.id_for("sk" + std::to_string(s));
            rec.item_id = "i" + std::to_string(s) + "p" +
                          std::to_string(practice[static_cast<size_t>(s)]);
            rec.correct = correct;
            rec.order_index = t;
            rec.order_key = t;
            seq.records.push_back(std::move(rec));
            ++practice[static_cast<size_t>(s)];
        }
        out.dataset.students.push_back(std::move(seq));
    }
    std::sort(out.dataset.students.begin(), out.dataset.students.end(),
              [](const StudentSequence& a, const StudentSequence& b) {
                  return a.student_id < b.student_id;
              });
    return out;
}

std::string to_canonical_csv(const Dataset& ds) {
    std::ostringstream out;
    out << "order,student,item,skill,correct\n";
    for (const auto& seq : ds.students) {
        for (const auto& rec : seq.records) {
            out << rec.order_index << ',' << csv_escape(seq.student_id) << ','
                << csv_escape(rec.item_id) << ','
                << csv_escape(ds.vocab.tag(rec.skill_id)) << ',' << rec.correct
                << '\n';
        }
    }
    return out.str();
}

void write_canonical_csv(const std::string& path, const Dataset& ds) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write file: " + path);
    out << to_canonical_csv(ds);
}

} // namespace ktbench
