#include "hoids/dataset.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <stdexcept>

#include "hoids/config.hpp"
#include "hoids/rng.hpp"
#include "hoids/textio.hpp"

namespace hoids {

int LabelSpace::index_of(const std::string& name) const {
    for (size_t i = 0; i < names.size(); ++i)
        if (names[i] == name) return static_cast<int>(i);
    return -1;
}

void LabelSpace::validate() const {
    if (names.size() < 2) throw std::runtime_error("label space needs at least 2 classes");
    std::set<std::string> seen(names.begin(), names.end());
    if (seen.size() != names.size()) throw std::runtime_error("duplicate class names");
    if (positive && (*positive < 0 || *positive >= k()))
        throw std::runtime_error("positive class index out of range");
}

ConnectionRecord Dataset::record(long i) const {
    ConnectionRecord r;
    r.features = features.row(i).transpose();
    if (labels[i] >= 0) r.label = labels[i];
    return r;
}

std::vector<long> Dataset::class_counts() const {
    std::vector<long> counts(label_space.k(), 0);
    for (int l : labels)
        if (l >= 0) ++counts[l];
    return counts;
}

bool Dataset::fully_labeled() const {
    return std::all_of(labels.begin(), labels.end(), [](int l) { return l >= 0; });
}

std::vector<std::string> Dataset::column_names() const {
    std::vector<std::string> out;
    out.reserve(columns.size());
    for (const auto& c : columns) out.push_back(c.name);
    return out;
}

Dataset Dataset::select_columns(const std::vector<int>& cols) const {
    Dataset out;
    out.features.resize(features.rows(), static_cast<long>(cols.size()));
    out.columns.reserve(cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] < 0 || cols[j] >= m()) throw std::runtime_error("column index out of range");
        out.features.col(static_cast<long>(j)) = features.col(cols[j]);
        out.columns.push_back(columns[cols[j]]);
    }
    out.labels = labels;
    out.label_space = label_space;
    return out;
}

Dataset Dataset::select_rows(const std::vector<long>& rows) const {
    Dataset out;
    out.features.resize(static_cast<long>(rows.size()), features.cols());
    out.labels.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        if (rows[i] < 0 || rows[i] >= n()) throw std::runtime_error("row index out of range");
        out.features.row(static_cast<long>(i)) = features.row(rows[i]);
        out.labels.push_back(labels[rows[i]]);
    }
    out.columns = columns;
    out.label_space = label_space;
    return out;
}

// ---------------------------------------------------------------------------
// Schema

Schema Schema::parse(const std::string& text) {
    Config cfg = Config::parse(text);
    Schema s;
    std::string fmt = cfg.get_or("format", "csv");
    if (fmt == "arff")
        s.arff = true;
    else if (fmt != "csv")
        throw std::runtime_error("schema: unknown format '" + fmt + "'");
    s.skip_rows = static_cast<int>(cfg.get_long("skip_rows", 0));

    std::string policy = cfg.get_or("nominal", "drop");
    if (policy == "drop")
        s.nominal_policy = NominalPolicy::Drop;
    else if (policy == "ordinal")
        s.nominal_policy = NominalPolicy::Ordinal;
    else if (policy == "onehot")
        s.nominal_policy = NominalPolicy::OneHot;
    else
        throw std::runtime_error("schema: unknown nominal policy '" + policy + "'");

    for (const std::string& spec : cfg.all("column")) {
        // "name kind" with kind in {numeric, nominal, label}
        size_t sp = spec.find_first_of(" \t");
        if (sp == std::string::npos)
            throw std::runtime_error("schema: column needs 'name kind': " + spec);
        Column c;
        c.name = trim(spec.substr(0, sp));
        std::string kind = trim(spec.substr(sp + 1));
        if (kind == "numeric")
            c.kind = ColumnKind::Numeric;
        else if (kind == "nominal")
            c.kind = ColumnKind::Nominal;
        else if (kind == "label")
            c.kind = ColumnKind::Label;
        else
            throw std::runtime_error("schema: unknown column kind '" + kind + "'");
        s.columns.push_back(std::move(c));
    }

    if (auto v = cfg.get("classes")) {
        for (const auto& name : split_csv(*v)) s.classes.push_back(trim(name));
    }
    for (const std::string& m : cfg.all("map")) {
        size_t sp = m.find_first_of(" \t");
        if (sp == std::string::npos) throw std::runtime_error("schema: map needs 'value class': " + m);
        s.label_map[trim(m.substr(0, sp))] = trim(m.substr(sp + 1));
    }
    s.default_class = cfg.get_or("default_class", "");
    if (auto v = cfg.get("positive")) s.positive = *v;
    for (const std::string& v : cfg.all("values")) {
        // "column v0,v1,..." pins nominal codes / one-hot columns
        size_t sp = v.find_first_of(" \t");
        if (sp == std::string::npos) throw std::runtime_error("schema: values needs 'column list'");
        std::string col = trim(v.substr(0, sp));
        bool found = false;
        for (auto& c : s.columns) {
            if (c.name == col) {
                for (const auto& item : split_csv(trim(v.substr(sp + 1)))) c.values.push_back(trim(item));
                found = true;
                break;
            }
        }
        if (!found) throw std::runtime_error("schema: values for unknown column '" + col + "'");
    }
    s.validate();
    return s;
}

Schema Schema::from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open schema file: " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse(text);
}

void Schema::validate() const {
    if (columns.empty()) throw std::runtime_error("schema: no columns");
    int label_cols = 0;
    for (const auto& c : columns)
        if (c.kind == ColumnKind::Label) ++label_cols;
    if (label_cols > 1) throw std::runtime_error("schema: more than one label column");
    if (label_cols == 1) {
        if (classes.size() < 2) throw std::runtime_error("schema: label column needs >= 2 classes");
        std::set<std::string> cls(classes.begin(), classes.end());
        for (const auto& [value, klass] : label_map)
            if (!cls.count(klass))
                throw std::runtime_error("schema: map target '" + klass + "' not in classes");
        if (!default_class.empty() && !cls.count(default_class))
            throw std::runtime_error("schema: default_class not in classes");
        if (positive && !cls.count(*positive))
            throw std::runtime_error("schema: positive class not in classes");
    }
}

LabelSpace Schema::label_space() const {
    LabelSpace ls;
    ls.names = classes;
    if (positive) ls.positive = ls.index_of(*positive);
    return ls;
}

// ---------------------------------------------------------------------------
// CSV loading

namespace {

bool is_missing(const std::string& field) {
    return field.empty() || field == "?" || field == "NA";
}

struct RawRow {
    std::vector<double> numeric;              // values for numeric columns, schema order
    std::vector<std::string> nominal;         // raw strings for encoded nominal columns
    int label = -1;
    bool rejected = false;
};

}  // namespace

LoadResult load_csv(const std::string& path, const Schema& schema) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dataset file: " + path);

    const bool encode_nominal = schema.nominal_policy != Schema::NominalPolicy::Drop;
    int label_col = -1;
    std::vector<int> numeric_cols, nominal_cols;
    for (size_t j = 0; j < schema.columns.size(); ++j) {
        switch (schema.columns[j].kind) {
            case Schema::ColumnKind::Numeric: numeric_cols.push_back(static_cast<int>(j)); break;
            case Schema::ColumnKind::Nominal:
                if (encode_nominal) nominal_cols.push_back(static_cast<int>(j));
                break;
            case Schema::ColumnKind::Label: label_col = static_cast<int>(j); break;
        }
    }
    LabelSpace ls = label_col >= 0 ? schema.label_space() : LabelSpace{};

    std::vector<RawRow> rows;
    long rejected = 0;
    std::string line;
    long lineno = 0;
    int skip = schema.skip_rows;
    bool in_arff_header = schema.arff;
    while (std::getline(in, line)) {
        ++lineno;
        if (in_arff_header) {
            std::string t = trim(line);
            std::string lower;
            for (char c : t) lower += static_cast<char>(std::tolower(c));
            if (lower == "@data") in_arff_header = false;
            continue;
        }
        if (skip > 0) {
            --skip;
            continue;
        }
        std::string t = trim(line);
        if (t.empty()) continue;
        std::vector<std::string> fields = split_csv(t);
        // KDD rows end with "normal." style labels and no trailing comma;
        // tolerate one trailing empty field from a terminal comma.
        if (fields.size() == schema.columns.size() + 1 && fields.back().empty()) fields.pop_back();
        if (fields.size() != schema.columns.size())
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": expected " +
                                     std::to_string(schema.columns.size()) + " fields, got " +
                                     std::to_string(fields.size()));

        RawRow row;
        row.numeric.reserve(numeric_cols.size());
        for (int j : numeric_cols) {
            std::string f = trim(fields[j]);
            if (is_missing(f)) {
                row.rejected = true;
                break;
            }
            auto v = parse_double(f);
            if (!v || !std::isfinite(*v)) {
                row.rejected = true;
                break;
            }
            row.numeric.push_back(*v);
        }
        if (!row.rejected && encode_nominal) {
            for (int j : nominal_cols) {
                std::string f = trim(fields[j]);
                if (is_missing(f)) {
                    row.rejected = true;
                    break;
                }
                row.nominal.push_back(f);
            }
        }
        if (!row.rejected && label_col >= 0) {
            std::string raw = trim(fields[label_col]);
            std::string klass;
            auto it = schema.label_map.find(raw);
            if (it != schema.label_map.end())
                klass = it->second;
            else if (ls.index_of(raw) >= 0)
                klass = raw;
            else if (!schema.default_class.empty())
                klass = schema.default_class;
            else
                throw std::runtime_error(path + ":" + std::to_string(lineno) +
                                         ": unknown label value '" + raw + "'");
            row.label = ls.index_of(klass);
        }
        if (row.rejected)
            ++rejected;
        else
            rows.push_back(std::move(row));
    }
    if (rows.empty()) throw std::runtime_error(path + ": no usable data rows");

    // resolve nominal encodings: declared values, else sorted distinct per column
    std::vector<std::vector<std::string>> nominal_values(nominal_cols.size());
    for (size_t nj = 0; nj < nominal_cols.size(); ++nj) {
        const auto& declared = schema.columns[nominal_cols[nj]].values;
        if (!declared.empty()) {
            nominal_values[nj] = declared;
        } else {
            std::set<std::string> distinct;
            for (const auto& row : rows) distinct.insert(row.nominal[nj]);
            nominal_values[nj].assign(distinct.begin(), distinct.end());
        }
    }

    // assemble output columns
    Dataset ds;
    ds.label_space = ls;
    struct OutCol {
        std::string name;
        ColumnMeta::Kind kind;
        bool from_nominal;
        size_t nominal_index;  // index into nominal_cols
        int onehot_value;      // -1 for ordinal
        int numeric_index;     // index into row.numeric
    };
    std::vector<OutCol> out_cols;
    {
        size_t nj = 0, qj = 0;
        for (size_t j = 0; j < schema.columns.size(); ++j) {
            const auto& c = schema.columns[j];
            if (c.kind == Schema::ColumnKind::Numeric) {
                out_cols.push_back({c.name, ColumnMeta::Kind::Numeric, false, 0, -1,
                                    static_cast<int>(qj++)});
            } else if (c.kind == Schema::ColumnKind::Nominal && encode_nominal) {
                if (schema.nominal_policy == Schema::NominalPolicy::Ordinal) {
                    out_cols.push_back({c.name, ColumnMeta::Kind::NominalEncoded, true, nj, -1, -1});
                } else {
                    for (size_t v = 0; v < nominal_values[nj].size(); ++v)
                        out_cols.push_back({c.name + "=" + nominal_values[nj][v],
                                            ColumnMeta::Kind::NominalEncoded, true, nj,
                                            static_cast<int>(v), -1});
                }
                ++nj;
            }
        }
    }

    // second pass may reject rows whose nominal value is undeclared
    std::vector<char> keep(rows.size(), 1);
    std::vector<std::vector<int>> codes(rows.size());
    if (encode_nominal && !nominal_cols.empty()) {
        for (size_t i = 0; i < rows.size(); ++i) {
            codes[i].resize(nominal_cols.size());
            for (size_t nj = 0; nj < nominal_cols.size(); ++nj) {
                const auto& vals = nominal_values[nj];
                auto it = std::find(vals.begin(), vals.end(), rows[i].nominal[nj]);
                if (it == vals.end()) {
                    keep[i] = 0;
                    ++rejected;
                    break;
                }
                codes[i][nj] = static_cast<int>(it - vals.begin());
            }
        }
    }

    long n_keep = std::count(keep.begin(), keep.end(), 1);
    if (n_keep == 0) throw std::runtime_error(path + ": no usable data rows");
    ds.features.resize(n_keep, static_cast<long>(out_cols.size()));
    ds.labels.reserve(n_keep);
    long r = 0;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (!keep[i]) continue;
        for (size_t j = 0; j < out_cols.size(); ++j) {
            const OutCol& oc = out_cols[j];
            double v;
            if (!oc.from_nominal)
                v = rows[i].numeric[oc.numeric_index];
            else if (oc.onehot_value < 0)
                v = static_cast<double>(codes[i][oc.nominal_index]);
            else
                v = codes[i][oc.nominal_index] == oc.onehot_value ? 1.0 : 0.0;
            ds.features(r, static_cast<long>(j)) = v;
        }
        ds.labels.push_back(rows[i].label);
        ++r;
    }
    for (const auto& oc : out_cols) {
        ColumnMeta meta;
        meta.name = oc.name;
        meta.kind = oc.kind;
        ds.columns.push_back(meta);
    }
    return {std::move(ds), rejected};
}

void save_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write dataset file: " + path);
    for (int j = 0; j < ds.m(); ++j) {
        if (j) out << ',';
        out << ds.columns[j].name;
    }
    const bool labeled = ds.label_space.k() >= 2;
    if (labeled) out << (ds.m() ? "," : "") << "label";
    out << '\n';
    for (long i = 0; i < ds.n(); ++i) {
        for (int j = 0; j < ds.m(); ++j) {
            if (j) out << ',';
            out << format_double(ds.features(i, j));
        }
        if (labeled) {
            out << (ds.m() ? "," : "");
            out << (ds.labels[i] >= 0 ? ds.label_space.names[ds.labels[i]] : std::string("?"));
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

// ---------------------------------------------------------------------------
// Standardization

Eigen::VectorXd StandardizationRecipe::apply(const Eigen::VectorXd& x) const {
    if (x.size() != m())
        throw std::runtime_error("standardize: expected " + std::to_string(m()) + " features, got " +
                                 std::to_string(x.size()));
    Eigen::VectorXd out(x.size());
    for (int j = 0; j < m(); ++j) {
        const ColumnMeta& c = columns[j];
        out[j] = c.kind == ColumnMeta::Kind::Constant ? 0.0 : (x[j] - c.mean) / c.stddev;
    }
    return out;
}

StandardizationRecipe standardize_fit(const Dataset& train) {
    const long n = train.n();
    if (n < 2) throw std::runtime_error("standardize_fit needs at least 2 rows");
    StandardizationRecipe recipe;
    recipe.columns = train.columns;
    for (int j = 0; j < train.m(); ++j) {
        const auto col = train.features.col(j);
        const double mean = col.mean();
        const double ss = (col.array() - mean).square().sum();
        const double sd = std::sqrt(ss / static_cast<double>(n - 1));
        ColumnMeta& c = recipe.columns[j];
        c.mean = mean;
        c.stddev = sd;
        if (sd <= 1e-12 * (1.0 + std::abs(mean))) c.kind = ColumnMeta::Kind::Constant;
    }
    return recipe;
}

Dataset standardize_apply(const Dataset& ds, const StandardizationRecipe& recipe) {
    if (ds.m() != recipe.m())
        throw std::runtime_error("standardize_apply: dataset has " + std::to_string(ds.m()) +
                                 " columns, recipe has " + std::to_string(recipe.m()));
    Dataset out;
    out.features.resize(ds.n(), ds.m());
    for (int j = 0; j < ds.m(); ++j) {
        const ColumnMeta& c = recipe.columns[j];
        if (c.kind == ColumnMeta::Kind::Constant)
            out.features.col(j).setZero();
        else
            out.features.col(j) = (ds.features.col(j).array() - c.mean) / c.stddev;
    }
    out.labels = ds.labels;
    out.columns = recipe.columns;
    out.label_space = ds.label_space;
    return out;
}

// ---------------------------------------------------------------------------
// Sampling and relabeling

Dataset stratified_sample(const Dataset& ds, const std::map<int, long>& per_class_counts,
                          uint64_t seed) {
    std::vector<std::vector<long>> by_class(ds.label_space.k());
    for (long i = 0; i < ds.n(); ++i)
        if (ds.labels[i] >= 0) by_class[ds.labels[i]].push_back(i);

    std::vector<long> chosen;
    for (const auto& [cls, count] : per_class_counts) {
        if (cls < 0 || cls >= ds.label_space.k())
            throw std::runtime_error("stratified_sample: class index out of range");
        auto& pool = by_class[cls];
        if (count > static_cast<long>(pool.size()))
            throw std::runtime_error("stratified_sample: class '" + ds.label_space.names[cls] +
                                     "' has " + std::to_string(pool.size()) + " rows, requested " +
                                     std::to_string(count));
        Rng rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(cls + 1)));
        std::vector<long> shuffled = pool;
        rng.shuffle(shuffled);
        chosen.insert(chosen.end(), shuffled.begin(), shuffled.begin() + count);
    }
    return ds.select_rows(chosen);
}

Dataset relabel(const Dataset& ds, const std::map<std::string, std::string>& mapping,
                const std::optional<std::vector<std::string>>& new_order,
                const std::optional<std::string>& positive) {
    std::vector<std::string> new_names;
    std::vector<int> old_to_new(ds.label_space.k(), -1);
    auto new_index = [&](const std::string& name) {
        for (size_t i = 0; i < new_names.size(); ++i)
            if (new_names[i] == name) return static_cast<int>(i);
        new_names.push_back(name);
        return static_cast<int>(new_names.size()) - 1;
    };
    if (new_order) new_names = *new_order;

    for (int a = 0; a < ds.label_space.k(); ++a) {
        const std::string& old_name = ds.label_space.names[a];
        auto it = mapping.find(old_name);
        if (it == mapping.end())
            throw std::runtime_error("relabel: class '" + old_name + "' unmapped");
        if (new_order) {
            int idx = -1;
            for (size_t i = 0; i < new_names.size(); ++i)
                if (new_names[i] == it->second) idx = static_cast<int>(i);
            if (idx < 0)
                throw std::runtime_error("relabel: class '" + it->second + "' not in new order");
            old_to_new[a] = idx;
        } else {
            old_to_new[a] = new_index(it->second);
        }
    }

    Dataset out;
    out.features = ds.features;
    out.columns = ds.columns;
    out.labels.reserve(ds.labels.size());
    for (int l : ds.labels) out.labels.push_back(l >= 0 ? old_to_new[l] : -1);
    out.label_space.names = new_names;
    if (positive) {
        int p = -1;
        for (size_t i = 0; i < new_names.size(); ++i)
            if (new_names[i] == *positive) p = static_cast<int>(i);
        if (p < 0) throw std::runtime_error("relabel: positive class not in new label space");
        out.label_space.positive = p;
    }
    out.label_space.validate();
    return out;
}

}  // namespace hoids
