#pragma once

// Umbrella header.

#include "omseq/io.hpp"
#include "omseq/norm.hpp"
#include "omseq/oracle.hpp"
#include "omseq/property_suite.hpp"
#include "omseq/sequence.hpp"
#include "omseq/validation.hpp"
#include "omseq/weight.hpp"
#include "omseq/young.hpp"
