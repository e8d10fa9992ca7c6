#ifndef GPERM_RENDER_HPP
#define GPERM_RENDER_HPP

#include <string>

#include "gperm/dyck.hpp"
#include "gperm/partitions.hpp"

namespace gperm {

/* Slash/backslash picture, one line per height level, highest first. */
std::string render_dyck(const DyckPath& path);

/* Rows of circles. */
std::string render_ferrers(const FerrersPartition& q);

/* Tuple plus a small two-node sketch. */
std::string render_multidigraph(const Multidigraph2& g);

}  // namespace gperm

#endif
