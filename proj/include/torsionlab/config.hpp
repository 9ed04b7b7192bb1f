#ifndef TORSIONLAB_CONFIG_HPP_
#define TORSIONLAB_CONFIG_HPP_

namespace torsionlab {

  //! Candidate count above which exhaustive enumerations refuse to run.
  //! Defaults to 1e6; the TORSIONLAB_CEILING environment variable overrides it.
  double default_ceiling();

}  // namespace torsionlab

#endif  // TORSIONLAB_CONFIG_HPP_
