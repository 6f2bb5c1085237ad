#ifndef FAIRAUC_CSV_HPP
#define FAIRAUC_CSV_HPP

#include <string>

#include "fairauc/moments.hpp"
#include "fairauc/types.hpp"

namespace fairauc {

struct IngestOptions {
    bool log1p = false;  // log1p numeric columns (count features contain zeros)
};

// Reads a headered CSV into columns: the group column must hold exactly two
// distinct values (lexicographically first becomes group a), the class
// column must be binary 0/1. Numeric columns are optionally log1p'd and
// missing cells imputed with the group-wise mean; categorical columns are
// one-hot expanded with the first category dropped.
GroupedColumns ingest(const std::string& path, const std::string& group_col,
                      const std::string& class_col, const IngestOptions& opts = {});

// Writes the dataset with full double precision so a read-back reproduces
// the values bit-exactly. Group prints as a/b, class as 0/1.
void write_dataset_csv(const GroupedColumns& data, const std::string& path,
                       const std::string& group_col = "group",
                       const std::string& class_col = "y");

}  // namespace fairauc

#endif
