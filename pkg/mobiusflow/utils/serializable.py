import pickle
import sys

__all__ = ['Serializable']


class Serializable(object):
    """ Class for saving and loading the state of an object (sample sets, trajectories, reports).
    """

    def load(self, filename):
        """ Load state from file.

        Parameters
        ----------
        filename : str
            Path of file where the state was stored.

        Returns
        -------
        Serializable
            Returns the same object with the recovered state.
        """
        with open(filename, 'rb') as file_state:
            tmp_dict = pickle.load(file_state)
        self.__dict__.update(tmp_dict)
        return self

    def save(self, filename):
        """ Save state to file.

        Parameters
        ----------
        filename : str
            Path of file where the state is stored.
        """
        sys.setrecursionlimit(10 ** 4)
        with open(filename, 'wb') as file_state:
            pickle.dump(self.__dict__, file_state, protocol=pickle.HIGHEST_PROTOCOL)
