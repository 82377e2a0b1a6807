#include "skelforge/skeleton.hpp"

namespace skelforge {

// Bundled 53-joint configuration. Counts per class: 1 Root, 8 ThreeD,
// 15 TwoD, 25 OneD, 4 Static. Overridable via --topology.
const std::string& default_topology_document() {
    static const std::string doc = R"json(
{
 "name": "default-53",
 "up_axis": "z",
 "units": "meters",
 "joints": [
  {
   "id": 0,
   "name": "Hips",
   "parent": null,
   "dof_class": "Root",
   "reference_child": 43,
   "weight": 1.0,
   "rest_direction": [
    1.0,
    0.0,
    0.0
   ],
   "bone_length": 1.0
  },
  {
   "id": 1,
   "name": "Spine",
   "parent": 0,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    0.0,
    1.0
   ],
   "bone_length": 0.1
  },
  {
   "id": 2,
   "name": "Spine1",
   "parent": 1,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    0.0,
    1.0
   ],
   "bone_length": 0.11
  },
  {
   "id": 3,
   "name": "Spine2",
   "parent": 2,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    0.0,
    1.0
   ],
   "bone_length": 0.11
  },
  {
   "id": 4,
   "name": "Spine3",
   "parent": 3,
   "dof_class": "ThreeD",
   "reference_child": 7,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    0.0,
    1.0
   ],
   "bone_length": 0.12
  },
  {
   "id": 5,
   "name": "Neck",
   "parent": 4,
   "dof_class": "ThreeD",
   "reference_child": 6,
   "weight": 0.8,
   "rest_direction": [
    0.12186934340514749,
    0.0,
    0.9925461516413221
   ],
   "bone_length": 0.1
  },
  {
   "id": 6,
   "name": "Head",
   "parent": 5,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.6,
   "rest_direction": [
    -0.05233595624294384,
    0.0,
    0.9986295347545739
   ],
   "bone_length": 0.22
  },
  {
   "id": 7,
   "name": "LClavicle",
   "parent": 4,
   "dof_class": "Static",
   "reference_child": null,
   "weight": 0.0,
   "rest_direction": [
    0.0,
    0.9799995100003674,
    0.19899990050007463
   ],
   "bone_length": 0.16
  },
  {
   "id": 8,
   "name": "LUpperArm",
   "parent": 7,
   "dof_class": "ThreeD",
   "reference_child": 9,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    1.0,
    0.0
   ],
   "bone_length": 0.28
  },
  {
   "id": 9,
   "name": "LForearm",
   "parent": 8,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.9,
   "rest_direction": [
    0.3420201433256687,
    0.9396926207859084,
    0.0
   ],
   "bone_length": 0.26
  },
  {
   "id": 10,
   "name": "LHand",
   "parent": 9,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.6,
   "rest_direction": [
    0.42261826174069944,
    0.9063077870366499,
    0.0
   ],
   "bone_length": 0.085
  },
  {
   "id": 11,
   "name": "LThumb1",
   "parent": 10,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.8191520442889918,
    0.5735764363510462,
    0.0
   ],
   "bone_length": 0.045
  },
  {
   "id": 12,
   "name": "LThumb2",
   "parent": 11,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.8910065241883679,
    0.45399049973954686,
    0.0
   ],
   "bone_length": 0.035
  },
  {
   "id": 13,
   "name": "LIndex1",
   "parent": 10,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.49999999999999994,
    0.8660254037844387,
    0.0
   ],
   "bone_length": 0.07
  },
  {
   "id": 14,
   "name": "LIndex2",
   "parent": 13,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.5735764363510462,
    0.8191520442889919,
    0.0
   ],
   "bone_length": 0.032
  },
  {
   "id": 15,
   "name": "LIndex3",
   "parent": 14,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.6427876096865394,
    0.7660444431189781,
    0.0
   ],
   "bone_length": 0.022
  },
  {
   "id": 16,
   "name": "LMiddle1",
   "parent": 10,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.42261826174069944,
    0.9063077870366499,
    0.0
   ],
   "bone_length": 0.075
  },
  {
   "id": 17,
   "name": "LMiddle2",
   "parent": 16,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.49999999999999994,
    0.8660254037844387,
    0.0
   ],
   "bone_length": 0.035
  },
  {
   "id": 18,
   "name": "LMiddle3",
   "parent": 17,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.5735764363510462,
    0.8191520442889919,
    0.0
   ],
   "bone_length": 0.024
  },
  {
   "id": 19,
   "name": "LRing1",
   "parent": 10,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.3420201433256687,
    0.9396926207859084,
    0.0
   ],
   "bone_length": 0.07
  },
  {
   "id": 20,
   "name": "LRing2",
   "parent": 19,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.42261826174069944,
    0.9063077870366499,
    0.0
   ],
   "bone_length": 0.032
  },
  {
   "id": 21,
   "name": "LRing3",
   "parent": 20,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.49999999999999994,
    0.8660254037844387,
    0.0
   ],
   "bone_length": 0.022
  },
  {
   "id": 22,
   "name": "LPinky1",
   "parent": 10,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.25881904510252074,
    0.9659258262890683,
    0.0
   ],
   "bone_length": 0.06
  },
  {
   "id": 23,
   "name": "LPinky2",
   "parent": 22,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.3420201433256687,
    0.9396926207859084,
    0.0
   ],
   "bone_length": 0.027
  },
  {
   "id": 24,
   "name": "LPinky3",
   "parent": 23,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.42261826174069944,
    0.9063077870366499,
    0.0
   ],
   "bone_length": 0.019
  },
  {
   "id": 25,
   "name": "RClavicle",
   "parent": 4,
   "dof_class": "Static",
   "reference_child": null,
   "weight": 0.0,
   "rest_direction": [
    0.0,
    -0.9799995100003674,
    0.19899990050007463
   ],
   "bone_length": 0.16
  },
  {
   "id": 26,
   "name": "RUpperArm",
   "parent": 25,
   "dof_class": "ThreeD",
   "reference_child": 27,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    -1.0,
    0.0
   ],
   "bone_length": 0.28
  },
  {
   "id": 27,
   "name": "RForearm",
   "parent": 26,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.9,
   "rest_direction": [
    0.3420201433256687,
    -0.9396926207859084,
    0.0
   ],
   "bone_length": 0.26
  },
  {
   "id": 28,
   "name": "RHand",
   "parent": 27,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.6,
   "rest_direction": [
    0.42261826174069944,
    -0.9063077870366499,
    0.0
   ],
   "bone_length": 0.085
  },
  {
   "id": 29,
   "name": "RThumb1",
   "parent": 28,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.8191520442889918,
    -0.5735764363510462,
    0.0
   ],
   "bone_length": 0.045
  },
  {
   "id": 30,
   "name": "RThumb2",
   "parent": 29,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.8910065241883679,
    -0.45399049973954686,
    0.0
   ],
   "bone_length": 0.035
  },
  {
   "id": 31,
   "name": "RIndex1",
   "parent": 28,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.49999999999999994,
    -0.8660254037844387,
    0.0
   ],
   "bone_length": 0.07
  },
  {
   "id": 32,
   "name": "RIndex2",
   "parent": 31,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.5735764363510462,
    -0.8191520442889919,
    0.0
   ],
   "bone_length": 0.032
  },
  {
   "id": 33,
   "name": "RIndex3",
   "parent": 32,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.6427876096865394,
    -0.7660444431189781,
    0.0
   ],
   "bone_length": 0.022
  },
  {
   "id": 34,
   "name": "RMiddle1",
   "parent": 28,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.42261826174069944,
    -0.9063077870366499,
    0.0
   ],
   "bone_length": 0.075
  },
  {
   "id": 35,
   "name": "RMiddle2",
   "parent": 34,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.49999999999999994,
    -0.8660254037844387,
    0.0
   ],
   "bone_length": 0.035
  },
  {
   "id": 36,
   "name": "RMiddle3",
   "parent": 35,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.5735764363510462,
    -0.8191520442889919,
    0.0
   ],
   "bone_length": 0.024
  },
  {
   "id": 37,
   "name": "RRing1",
   "parent": 28,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.3420201433256687,
    -0.9396926207859084,
    0.0
   ],
   "bone_length": 0.07
  },
  {
   "id": 38,
   "name": "RRing2",
   "parent": 37,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.42261826174069944,
    -0.9063077870366499,
    0.0
   ],
   "bone_length": 0.032
  },
  {
   "id": 39,
   "name": "RRing3",
   "parent": 38,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.49999999999999994,
    -0.8660254037844387,
    0.0
   ],
   "bone_length": 0.022
  },
  {
   "id": 40,
   "name": "RPinky1",
   "parent": 28,
   "dof_class": "TwoD",
   "reference_child": null,
   "weight": 0.15,
   "rest_direction": [
    0.25881904510252074,
    -0.9659258262890683,
    0.0
   ],
   "bone_length": 0.06
  },
  {
   "id": 41,
   "name": "RPinky2",
   "parent": 40,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.3420201433256687,
    -0.9396926207859084,
    0.0
   ],
   "bone_length": 0.027
  },
  {
   "id": 42,
   "name": "RPinky3",
   "parent": 41,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.1,
   "rest_direction": [
    0.42261826174069944,
    -0.9063077870366499,
    0.0
   ],
   "bone_length": 0.019
  },
  {
   "id": 43,
   "name": "LHip",
   "parent": 0,
   "dof_class": "Static",
   "reference_child": null,
   "weight": 0.0,
   "rest_direction": [
    0.0,
    0.9284766219197541,
    -0.37139084876782025
   ],
   "bone_length": 0.115
  },
  {
   "id": 44,
   "name": "LThigh",
   "parent": 43,
   "dof_class": "ThreeD",
   "reference_child": 45,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    0.0,
    -1.0
   ],
   "bone_length": 0.42
  },
  {
   "id": 45,
   "name": "LShin",
   "parent": 44,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.9,
   "rest_direction": [
    -0.20791169081775934,
    0.0,
    -0.9781476007338057
   ],
   "bone_length": 0.43
  },
  {
   "id": 46,
   "name": "LFoot",
   "parent": 45,
   "dof_class": "ThreeD",
   "reference_child": 47,
   "weight": 0.7,
   "rest_direction": [
    0.9205048534524404,
    0.0,
    -0.39073112848927377
   ],
   "bone_length": 0.16
  },
  {
   "id": 47,
   "name": "LToe",
   "parent": 46,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.3,
   "rest_direction": [
    1.0,
    0.0,
    0.0
   ],
   "bone_length": 0.07
  },
  {
   "id": 48,
   "name": "RHip",
   "parent": 0,
   "dof_class": "Static",
   "reference_child": null,
   "weight": 0.0,
   "rest_direction": [
    0.0,
    -0.9284766219197541,
    -0.37139084876782025
   ],
   "bone_length": 0.115
  },
  {
   "id": 49,
   "name": "RThigh",
   "parent": 48,
   "dof_class": "ThreeD",
   "reference_child": 50,
   "weight": 1.0,
   "rest_direction": [
    0.0,
    0.0,
    -1.0
   ],
   "bone_length": 0.42
  },
  {
   "id": 50,
   "name": "RShin",
   "parent": 49,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.9,
   "rest_direction": [
    -0.20791169081775934,
    0.0,
    -0.9781476007338057
   ],
   "bone_length": 0.43
  },
  {
   "id": 51,
   "name": "RFoot",
   "parent": 50,
   "dof_class": "ThreeD",
   "reference_child": 52,
   "weight": 0.7,
   "rest_direction": [
    0.9205048534524404,
    0.0,
    -0.39073112848927377
   ],
   "bone_length": 0.16
  },
  {
   "id": 52,
   "name": "RToe",
   "parent": 51,
   "dof_class": "OneD",
   "reference_child": null,
   "weight": 0.3,
   "rest_direction": [
    1.0,
    0.0,
    0.0
   ],
   "bone_length": 0.07
  }
 ]
}
)json";
    return doc;
}

}  // namespace skelforge
