#pragma once

#include <string>

#include "superalg/catalog.hpp"
#include "superalg/identities.hpp"
#include "superalg/series.hpp"

namespace superalg {

inline constexpr int kSchemaVersion = 1;

/// JSON per the table schema: {schema_version, algebra, field, N, D, grading,
/// components:[{deg, dim, reliable}], totals, width, value_set}.
std::string dims_json(const DimensionTable& table, const std::string& grading);
std::string dims_csv(const DimensionTable& table);

std::string identity_json(const IdentityReport& report);
std::string series_json(const TruncatedSeries& series, const std::string& label);
std::string check_json(const CheckReport& report, const std::string& label);
std::string growth_json(const DimensionTable& table, const std::vector<unsigned long>& gamma,
                        double slope, unsigned n0, unsigned n1);

/// Writes a file, creating parent directories; returns the path actually used.
std::string write_text(const std::string& dir, const std::string& filename, const std::string& payload);

/// Materialized multiplication tables of the small algebras (H_n, their
/// Kantor doubles, KanL2, M11) as JSON: basis labels plus every product
/// expanded in basis coordinates.
std::string structure_table_json(const std::string& name, FieldSpec field);

}  // namespace superalg
