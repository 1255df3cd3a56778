#pragma once

#include <Eigen/Dense>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hoids {

struct LabelSpace {
    std::vector<std::string> names;  // K unique class names, fixed order
    std::optional<int> positive;     // binary tasks: the class mapped to y = +1 (abnormal)

    int k() const { return static_cast<int>(names.size()); }
    int index_of(const std::string& name) const;  // -1 if absent
    void validate() const;                        // throws on duplicates / K < 2 / bad positive
};

struct ColumnMeta {
    enum class Kind { Numeric, NominalEncoded, Constant };
    std::string name;
    Kind kind = Kind::Numeric;
    double mean = 0.0;
    double stddev = 0.0;  // divisor N-1 over the training split
};

// One connection: feature vector plus optional class label.
struct ConnectionRecord {
    Eigen::VectorXd features;
    std::optional<int> label;
};

// Record matrix with per-column metadata and a label space. Rows without a
// label carry -1 in `labels`.
struct Dataset {
    Eigen::MatrixXd features;         // N x M
    std::vector<int> labels;          // N entries, -1 = unlabeled
    std::vector<ColumnMeta> columns;  // M entries
    LabelSpace label_space;

    long n() const { return features.rows(); }
    int m() const { return static_cast<int>(features.cols()); }
    ConnectionRecord record(long i) const;
    std::vector<long> class_counts() const;  // size K
    bool fully_labeled() const;
    std::vector<std::string> column_names() const;
    // new dataset with the given feature columns, in the given order
    Dataset select_columns(const std::vector<int>& cols) const;
    Dataset select_rows(const std::vector<long>& rows) const;
};

// Declarative description of a CSV (or ARFF-bodied) dataset file.
struct Schema {
    enum class NominalPolicy { Drop, Ordinal, OneHot };
    enum class ColumnKind { Numeric, Nominal, Label };
    struct Column {
        std::string name;
        ColumnKind kind = ColumnKind::Numeric;
        std::vector<std::string> values;  // declared nominal values (optional)
    };

    std::vector<Column> columns;
    NominalPolicy nominal_policy = NominalPolicy::Drop;
    std::vector<std::string> classes;                  // ordered class names
    std::map<std::string, std::string> label_map;      // raw label value -> class name
    std::string default_class;                         // optional catch-all
    std::optional<std::string> positive;               // class name for binary +1
    bool arff = false;                                 // skip header lines until @data
    int skip_rows = 0;

    static Schema parse(const std::string& text);      // see docs/schema format in README
    static Schema from_file(const std::string& path);
    void validate() const;
    LabelSpace label_space() const;
};

struct LoadResult {
    Dataset dataset;
    long rejected_rows = 0;  // rows dropped for non-numeric / missing values
};

// Reads a CSV file under `schema`. Nominal columns are dropped or encoded per
// the schema policy; the label column is mapped to class indices. Rows with
// unparsable or non-finite numeric fields are rejected and counted. Arity
// mismatches and unknown label values abort with the offending line number.
LoadResult load_csv(const std::string& path, const Schema& schema);

// Same dialect back out; labels written as class names in a trailing column.
void save_csv(const Dataset& ds, const std::string& path);

struct StandardizationRecipe {
    std::vector<ColumnMeta> columns;

    int m() const { return static_cast<int>(columns.size()); }
    // (x - mean) / stddev per column; constant columns map to 0
    Eigen::VectorXd apply(const Eigen::VectorXd& x) const;  // throws on arity mismatch
};

// Per-column mean/stddev (divisor N-1) over the training split; N >= 2.
StandardizationRecipe standardize_fit(const Dataset& train);
Dataset standardize_apply(const Dataset& ds, const StandardizationRecipe& recipe);

// Deterministic per-class sampling without replacement; counts keyed by class
// index. Throws if a class has fewer members than requested.
Dataset stratified_sample(const Dataset& ds, const std::map<int, long>& per_class_counts,
                          uint64_t seed);

// Maps every old class to a new class; the mapping must cover the old label
// space. New class order: first appearance over old classes in index order,
// unless `new_order` pins it.
Dataset relabel(const Dataset& ds, const std::map<std::string, std::string>& mapping,
                const std::optional<std::vector<std::string>>& new_order = std::nullopt,
                const std::optional<std::string>& positive = std::nullopt);

}  // namespace hoids
