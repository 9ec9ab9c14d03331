#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qda/addressability.hpp"
#include "qda/electrostatics.hpp"
#include "qda/magnet.hpp"
#include "qda/router.hpp"

namespace qda {

// Assembly config, one prism per line, corners in nm and magnetization in
// kA/m:  prism x0 y0 z0 x1 y1 z1 mx my mz    '#' starts a comment.
MagnetAssembly parse_assembly(std::istream& in);
MagnetAssembly parse_assembly_file(const std::string& path);
void write_assembly(std::ostream& out, const MagnetAssembly& assembly);

// header: x_nm,y_nm,z_nm,Bx_mT,By_mT,Bz_mT
void write_field_map_csv(std::ostream& out, const std::vector<FieldSample>& samples);

void write_report_csv(std::ostream& out, const AddressabilityReport& report);
std::string report_to_json(const AddressabilityReport& report);

std::string routing_to_json(const RoutedCircuit& routed, bool verified);

// header: x_nm,y_nm,phi_V
void write_potential_slice_csv(std::ostream& out, const PotentialGrid& grid, double plane_z);
std::string wells_to_json(const std::vector<Well>& wells);

// fixed 9-significant-digit float formatting shared by all emitters so that
// identical configs give byte-identical artifacts
std::string fmt_g9(double v);

}  // namespace qda
